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

#ifndef MONOPART_MATCHING_HPP
#define MONOPART_MATCHING_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "monopart/components.hpp"
#include "monopart/graph.hpp"

namespace monopart {

namespace detail {

// Augmenting-path maximum matching (Kuhn). Top vertices are tried in list
// order, their neighbours in bot list order, so the result is deterministic.
template <typename Allowed>
Matching augmenting_path_matching(const IndexSet& tops, const IndexSet& bots,
                                  std::size_t n_bot_host, Allowed&& allowed) {
  constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> adj(tops.size());
  for (std::size_t i = 0; i < tops.size(); ++i)
    for (std::size_t b : bots)
      if (allowed(tops[i], b)) adj[i].push_back(b);

  std::vector<std::size_t> owner(n_bot_host, kFree);  // bot -> top position
  std::vector<std::size_t> seen(n_bot_host, kFree);

  auto augment = [&](auto&& self, std::size_t i, std::size_t stamp) -> bool {
    for (std::size_t b : adj[i]) {
      if (seen[b] == stamp) continue;
      seen[b] = stamp;
      if (owner[b] == kFree || self(self, owner[b], stamp)) {
        owner[b] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < tops.size(); ++i) augment(augment, i, i);

  Matching m;
  for (std::size_t i = 0; i < tops.size(); ++i)
    for (std::size_t b : adj[i])
      if (owner[b] == i) {
        m.emplace_back(tops[i], b);
        break;
      }
  return m;
}

}  // namespace detail

/// Maximum matching using only edges of colour `c` between `top_set` and
/// `bot_set`.
inline Matching max_matching(const Graph& g, const IndexSet& top_set,
                             const IndexSet& bot_set, Colour c) {
  return detail::augmenting_path_matching(
      top_set, bot_set, g.n_bot(),
      [&](std::size_t t, std::size_t b) { return g.has_edge(t, b, c); });
}

inline Matching max_matching(const Graph& g, const VertexMask& mask, Colour c) {
  return max_matching(g, mask.top_list(), mask.bot_list(), c);
}

/// Maximum matching of colour `comp.colour` inside a component, restricted to
/// the vertices still alive in `mask`.
inline Matching max_matching_in(const Graph& g, const MonoComponent& comp,
                                const VertexMask& mask) {
  IndexSet t, b;
  for (auto v : comp.top)
    if (mask.top[v]) t.push_back(v);
  for (auto v : comp.bot)
    if (mask.bot[v]) b.push_back(v);
  return max_matching(g, t, b, comp.colour);
}

/// A monochromatic matching certified to lie in one component of its colour.
struct ConnectedMatching {
  Colour colour = Colour::Red;
  Matching pairs;
  std::optional<std::size_t> component_id;

  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }

  friend bool operator==(const ConnectedMatching&, const ConnectedMatching&) =
      default;
};

}  // namespace monopart

#endif  // MONOPART_MATCHING_HPP
