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

#ifndef MONOPART_COVER_HPP
#define MONOPART_COVER_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monopart/components.hpp"
#include "monopart/errors.hpp"
#include "monopart/graph.hpp"
#include "monopart/matching.hpp"

namespace monopart {

/// Disjoint connected matchings plus the vertices none of them touches.
struct Cover {
  std::vector<ConnectedMatching> matchings;
  IndexSet uncovered_top;
  IndexSet uncovered_bot;

  std::size_t non_empty_count() const {
    std::size_t k = 0;
    for (const auto& m : matchings) k += m.empty() ? 0 : 1;
    return k;
  }
  bool is_partition() const {
    return uncovered_top.empty() && uncovered_bot.empty();
  }

  friend bool operator==(const Cover&, const Cover&) = default;
};

/// Packs matchings into a Cover: empty matchings are dropped, component ids
/// are looked up in `g`, and the uncovered sets are computed.
inline Cover make_cover(const Graph& g, std::vector<ConnectedMatching> ms) {
  const ComponentAtlas atlas(g);
  Cover cov;
  VertexMask alive = VertexMask::all(g);
  for (auto& m : ms) {
    if (m.empty()) continue;
    std::sort(m.pairs.begin(), m.pairs.end());
    const auto& map = atlas[m.colour];
    const std::size_t id = map.of_top[m.pairs.front().first];
    bool one = true;
    for (const auto& [t, b] : m.pairs)
      one = one && map.of_top[t] == id && map.of_bot[b] == id;
    m.component_id = one ? std::optional<std::size_t>(id) : std::nullopt;
    alive.remove(m.pairs);
    cov.matchings.push_back(std::move(m));
  }
  cov.uncovered_top = alive.top_list();
  cov.uncovered_bot = alive.bot_list();
  return cov;
}

enum class ViolationKind {
  Disjointness,
  WrongColour,
  NotInOneComponent,
  NotAPartition,
  UncoveredMismatch,
};

inline const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::Disjointness: return "Disjointness";
    case ViolationKind::WrongColour: return "WrongColour";
    case ViolationKind::NotInOneComponent: return "NotInOneComponent";
    case ViolationKind::NotAPartition: return "NotAPartition";
    case ViolationKind::UncoveredMismatch: return "UncoveredMismatch";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::size_t matching = 0;  // index into Cover::matchings where meaningful
  std::string detail;
};

struct CoverReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind k) const {
    for (const auto& v : violations)
      if (v.kind == k) return true;
    return false;
  }
};

/// Checks every Cover invariant against `g`. Components are recomputed from
/// scratch; a stated component_id must match the housing component.
inline CoverReport verify_cover(const Graph& g, const Cover& cov,
                                bool require_partition) {
  for (const auto& m : cov.matchings)
    for (const auto& [t, b] : m.pairs)
      if (t >= g.n_top() || b >= g.n_bot())
        throw InvalidInput("cover pair (" + std::to_string(t) + ", " +
                           std::to_string(b) + ") out of range");
  for (auto t : cov.uncovered_top)
    if (t >= g.n_top()) throw InvalidInput("uncovered top index out of range");
  for (auto b : cov.uncovered_bot)
    if (b >= g.n_bot()) throw InvalidInput("uncovered bot index out of range");

  CoverReport rep;
  const ComponentAtlas atlas(g);
  std::vector<int> used_top(g.n_top(), 0), used_bot(g.n_bot(), 0);

  for (std::size_t i = 0; i < cov.matchings.size(); ++i) {
    const auto& m = cov.matchings[i];
    const auto& map = atlas[m.colour];
    bool wrong_colour = false;
    bool split = false;
    std::size_t home = ComponentMap::kOutside;
    for (const auto& [t, b] : m.pairs) {
      if (++used_top[t] == 2)
        rep.violations.push_back({ViolationKind::Disjointness, i,
                                  "top " + std::to_string(t) + " reused"});
      if (++used_bot[b] == 2)
        rep.violations.push_back({ViolationKind::Disjointness, i,
                                  "bot " + std::to_string(b) + " reused"});
      if (!g.has_edge(t, b, m.colour)) {
        wrong_colour = true;
        continue;
      }
      const std::size_t id = map.of_top[t];
      if (home == ComponentMap::kOutside) home = id;
      split = split || id != home;
    }
    if (wrong_colour)
      rep.violations.push_back(
          {ViolationKind::WrongColour, i,
           std::string("pair not coloured ") + colour_char(m.colour)});
    if (split)
      rep.violations.push_back({ViolationKind::NotInOneComponent, i,
                                "pairs span several components"});
    else if (m.component_id && home != ComponentMap::kOutside &&
             *m.component_id != home)
      rep.violations.push_back(
          {ViolationKind::NotInOneComponent, i,
           "component_id " + std::to_string(*m.component_id) +
               " but pairs lie in component " + std::to_string(home)});
  }

  IndexSet free_top, free_bot;
  for (std::size_t t = 0; t < g.n_top(); ++t)
    if (!used_top[t]) free_top.push_back(t);
  for (std::size_t b = 0; b < g.n_bot(); ++b)
    if (!used_bot[b]) free_bot.push_back(b);
  IndexSet listed_top = cov.uncovered_top, listed_bot = cov.uncovered_bot;
  std::sort(listed_top.begin(), listed_top.end());
  std::sort(listed_bot.begin(), listed_bot.end());
  if (listed_top != free_top || listed_bot != free_bot)
    rep.violations.push_back({ViolationKind::UncoveredMismatch, 0,
                              "uncovered sets disagree with the matchings"});
  if (require_partition && (!free_top.empty() || !free_bot.empty()))
    rep.violations.push_back(
        {ViolationKind::NotAPartition, 0,
         std::to_string(free_top.size() + free_bot.size()) +
             " vertices uncovered"});
  return rep;
}

}  // namespace monopart

#endif  // MONOPART_COVER_HPP
