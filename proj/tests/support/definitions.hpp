// Copyright 2026 The monopart Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Case definitions for 2-colourings, checked from scratch against the
// reference components.

#pragma once

#include <algorithm>
#include <set>
#include <string>

#include "monopart.hpp"
#include "oracles.hpp"

namespace ref {

inline bool is_component(const Graph& g, const monopart::MonoComponent& w) {
  const auto cs = ref::components(g, w.colour);
  return std::find(cs.begin(), cs.end(), Comp{w.top, w.bot}) != cs.end();
}

inline std::size_t union_size(const monopart::IndexSet& a, const monopart::IndexSet& b) {
  std::set<std::size_t> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return s.size();
}

inline std::size_t inter_size(const monopart::IndexSet& a, const monopart::IndexSet& b) {
  std::size_t k = 0;
  for (auto x : a) k += static_cast<std::size_t>(std::count(b.begin(), b.end(), x));
  return k;
}

inline bool nontrivial(const Comp& c) { return !c.top.empty() && !c.bot.empty(); }

inline bool has_spanning(const Graph& g, Colour c1, Colour c2) {
  for (auto c : {c1, c2})
    for (const auto& x : ref::components(g, c))
      if (x.top.size() == g.n_top() && x.bot.size() == g.n_bot()) return true;
  return false;
}

inline bool is_v_pair(const Graph& g, const Comp& r, const Comp& b) {
  if (!nontrivial(r) || !nontrivial(b)) return false;
  if (union_size(r.top, b.top) != g.n_top() || union_size(r.bot, b.bot) != g.n_bot())
    return false;
  return inter_size(r.top, b.top) == g.n_top() || inter_size(r.bot, b.bot) == g.n_bot();
}

inline bool has_v(const Graph& g, Colour c1, Colour c2) {
  for (const auto& r : ref::components(g, c1))
    for (const auto& b : ref::components(g, c2))
      if (is_v_pair(g, r, b)) return true;
  return false;
}

inline bool has_split(const Graph& g, Colour c1, Colour c2) {
  for (auto c : {c1, c2}) {
    const auto cs = ref::components(g, c);
    if (cs.size() != 2 || !nontrivial(cs[0]) || !nontrivial(cs[1])) return false;
  }
  return true;
}

// Empty when the witness satisfies its case and no earlier case (in the
// order Spanning, VColouring, Split) holds; otherwise the reason.
inline std::string two_class_problem(const Graph& g, const monopart::TwoColourClass& cls,
                                     Colour c1, Colour c2) {
  using Kind = monopart::TwoColourClass::Kind;
  for (const auto& w : cls.witness)
    if (!is_component(g, w)) return "witness is not a component";
  switch (cls.kind) {
    case Kind::Spanning: {
      if (cls.witness.size() != 1) return "witness size";
      const auto& s = cls.witness[0];
      if (s.top.size() != g.n_top() || s.bot.size() != g.n_bot())
        return "spanning witness misses vertices";
      break;
    }
    case Kind::VColouring: {
      if (has_spanning(g, c1, c2)) return "precedence: a spanning component exists";
      if (cls.witness.size() != 2) return "witness size";
      const auto& r = cls.witness[0];
      const auto& b = cls.witness[1];
      if (r.colour != c1 || b.colour != c2) return "colours";
      if (!is_v_pair(g, {r.top, r.bot}, {b.top, b.bot})) return "V conditions fail";
      const bool full = cls.full_side == monopart::Side::Top
                            ? inter_size(r.top, b.top) == g.n_top()
                            : inter_size(r.bot, b.bot) == g.n_bot();
      if (!full) return "named full side is not contained in both";
      break;
    }
    case Kind::Split: {
      if (has_spanning(g, c1, c2) || has_v(g, c1, c2)) return "precedence";
      if (!has_split(g, c1, c2)) return "split conditions fail";
      if (cls.witness.size() != 4) return "witness size";
      break;
    }
  }
  return {};
}

}  // namespace ref
