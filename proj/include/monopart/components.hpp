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

#ifndef MONOPART_COMPONENTS_HPP
#define MONOPART_COMPONENTS_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "monopart/graph.hpp"

namespace monopart {

enum class ComponentKind { Empty, Trivial, NonTrivial };

/// A connected component of the subgraph spanned by one colour. Isolated
/// vertices are materialized as trivial singleton components.
struct MonoComponent {
  Colour colour = Colour::Red;
  IndexSet top;
  IndexSet bot;
  std::size_t id = 0;

  ComponentKind kind() const {
    if (top.empty() && bot.empty()) return ComponentKind::Empty;
    if (top.empty() || bot.empty()) return ComponentKind::Trivial;
    return ComponentKind::NonTrivial;
  }
  bool non_trivial() const { return kind() == ComponentKind::NonTrivial; }
  std::size_t order() const { return top.size() + bot.size(); }

  friend bool operator==(const MonoComponent&, const MonoComponent&) = default;
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Components of colour `c` in the subgraph induced by `mask`. Ordered by
/// smallest top index, then smallest bottom index; ids are list positions.
inline std::vector<MonoComponent> components_within(const Graph& g, Colour c,
                                                    const VertexMask& mask) {
  const std::size_t nt = g.n_top();
  const std::size_t nb = g.n_bot();
  detail::DisjointSets ds(nt + nb);
  for (std::size_t t = 0; t < nt; ++t) {
    if (!mask.top[t]) continue;
    for (std::size_t b = 0; b < nb; ++b)
      if (mask.bot[b] && g.has_edge(t, b, c)) ds.unite(t, nt + b);
  }
  std::vector<std::size_t> slot(nt + nb, std::numeric_limits<std::size_t>::max());
  std::vector<MonoComponent> out;
  auto place = [&](std::size_t v) -> MonoComponent& {
    const std::size_t r = ds.find(v);
    if (slot[r] == std::numeric_limits<std::size_t>::max()) {
      slot[r] = out.size();
      out.push_back(MonoComponent{c, {}, {}, 0});
    }
    return out[slot[r]];
  };
  for (std::size_t t = 0; t < nt; ++t)
    if (mask.top[t]) place(t).top.push_back(t);
  for (std::size_t b = 0; b < nb; ++b)
    if (mask.bot[b]) place(nt + b).bot.push_back(b);

  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  std::stable_sort(out.begin(), out.end(),
                   [](const MonoComponent& x, const MonoComponent& y) {
                     const std::size_t xt = x.top.empty() ? kNone : x.top[0];
                     const std::size_t yt = y.top.empty() ? kNone : y.top[0];
                     if (xt != yt) return xt < yt;
                     const std::size_t xb = x.bot.empty() ? kNone : x.bot[0];
                     const std::size_t yb = y.bot.empty() ? kNone : y.bot[0];
                     return xb < yb;
                   });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].id = i;
  return out;
}

inline std::vector<MonoComponent> components(const Graph& g, Colour c) {
  return components_within(g, c, VertexMask::all(g));
}

/// Components of one colour plus vertex-to-component lookup.
struct ComponentMap {
  Colour colour = Colour::Red;
  std::vector<MonoComponent> list;
  std::vector<std::size_t> of_top;
  std::vector<std::size_t> of_bot;

  ComponentMap() = default;
  ComponentMap(const Graph& g, Colour c, const VertexMask& mask)
      : colour(c),
        list(components_within(g, c, mask)),
        of_top(g.n_top(), kOutside),
        of_bot(g.n_bot(), kOutside) {
    for (const auto& comp : list) {
      for (auto t : comp.top) of_top[t] = comp.id;
      for (auto b : comp.bot) of_bot[b] = comp.id;
    }
  }
  ComponentMap(const Graph& g, Colour c) : ComponentMap(g, c, VertexMask::all(g)) {}

  std::size_t non_trivial_count() const {
    return static_cast<std::size_t>(std::count_if(
        list.begin(), list.end(), [](const auto& x) { return x.non_trivial(); }));
  }

  std::vector<const MonoComponent*> non_trivial() const {
    std::vector<const MonoComponent*> out;
    for (const auto& x : list)
      if (x.non_trivial()) out.push_back(&x);
    return out;
  }

  static constexpr std::size_t kOutside = std::numeric_limits<std::size_t>::max();
};

/// All three colours' component maps of a graph.
struct ComponentAtlas {
  std::array<ComponentMap, 3> by_colour;

  explicit ComponentAtlas(const Graph& g)
      : by_colour{ComponentMap(g, Colour::Red), ComponentMap(g, Colour::Green),
                  ComponentMap(g, Colour::Blue)} {}
  ComponentAtlas(const Graph& g, const VertexMask& mask)
      : by_colour{ComponentMap(g, Colour::Red, mask),
                  ComponentMap(g, Colour::Green, mask),
                  ComponentMap(g, Colour::Blue, mask)} {}

  const ComponentMap& operator[](Colour c) const { return by_colour[index_of(c)]; }
};

}  // namespace monopart

#endif  // MONOPART_COMPONENTS_HPP
