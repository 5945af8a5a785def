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

#ifndef MONOPART_ORACLE_HPP
#define MONOPART_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "monopart/components.hpp"
#include "monopart/cover.hpp"
#include "monopart/errors.hpp"
#include "monopart/graph.hpp"
#include "monopart/matching.hpp"

namespace monopart {

// ---------------------------------------------------------------------------
// Minimum connected-matching partition

inline constexpr std::size_t kMatchingOracleCeiling = 12;

/// Smallest k ≤ budget such that V(g) splits into k non-empty monochromatic
/// connected matchings, with a witness. Searches sets of distinct non-trivial
/// components by increasing size (two matchings in one component merge into
/// one), pruning sets whose union misses a vertex, and tests each set for a
/// perfect matching on the edges it allows.
inline std::optional<std::pair<int, Cover>> min_matching_cover_exact(
    const Graph& g, int budget) {
  if (budget <= 0) throw InvalidInput("budget must be positive");
  if (!g.is_balanced()) throw InvalidInput("graph is not balanced");
  if (!g.is_complete()) throw InvalidInput("graph is not complete");
  if (g.n_top() > kMatchingOracleCeiling)
    throw ResourceLimit("matching oracle limited to n <= " +
                        std::to_string(kMatchingOracleCeiling));
  const std::size_t n = g.n_top();
  if (n == 0) return std::pair{0, Cover{}};

  const ComponentAtlas atlas(g);
  struct Candidate {
    Colour colour;
    std::size_t id;
    std::uint32_t top_bits = 0, bot_bits = 0;
  };
  std::vector<Candidate> cand;
  for (auto c : kColours)
    for (const auto* comp : atlas[c].non_trivial()) {
      Candidate x{c, comp->id};
      for (auto t : comp->top) x.top_bits |= 1u << t;
      for (auto b : comp->bot) x.bot_bits |= 1u << b;
      cand.push_back(x);
    }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);

  std::vector<std::size_t> pick;
  std::optional<Cover> found;
  auto try_set = [&]() {
    const IndexSet side = iota_set(n);
    Matching m = detail::augmenting_path_matching(
        side, side, n, [&](std::size_t t, std::size_t b) {
          const Colour c = *g.colour(t, b);
          const std::size_t id = atlas[c].of_top[t];
          for (auto i : pick)
            if (cand[i].colour == c && cand[i].id == id) return true;
          return false;
        });
    if (m.size() != n) return false;
    std::vector<ConnectedMatching> ms;
    for (auto i : pick) {
      ConnectedMatching cm{cand[i].colour, {}, cand[i].id};
      for (const auto& e : m)
        if (g.has_edge(e.first, e.second, cand[i].colour) &&
            atlas[cand[i].colour].of_top[e.first] == cand[i].id)
          cm.pairs.push_back(e);
      ms.push_back(std::move(cm));
    }
    found = make_cover(g, std::move(ms));
    return true;
  };
  auto search = [&](auto&& self, std::size_t from, std::size_t size,
                    std::uint32_t tops, std::uint32_t bots) -> bool {
    if (pick.size() == size) return tops == full && bots == full && try_set();
    for (std::size_t i = from; i < cand.size(); ++i) {
      pick.push_back(i);
      if (self(self, i + 1, size, tops | cand[i].top_bits, bots | cand[i].bot_bits))
        return true;
      pick.pop_back();
    }
    return false;
  };
  for (int k = 1; k <= budget; ++k) {
    pick.clear();
    if (search(search, 0, static_cast<std::size_t>(k), 0, 0)) {
      // A set of size k is only reached when no smaller set works, so every
      // chosen component carries at least one pair.
      return std::pair{static_cast<int>(found->non_empty_count()), *found};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cycles

/// A vertex named by its side and index.
struct Vertex {
  Side side = Side::Top;
  std::size_t index = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A monochromatic cycle given by its vertex order; a single vertex or a
/// single edge counts as a (degenerate) cycle.
struct Cycle {
  Colour colour = Colour::Red;
  std::vector<Vertex> vertices;
};

struct CyclePartition {
  std::vector<Cycle> cycles;
};

inline constexpr std::size_t kCycleOracleCeiling = 18;

namespace detail {

// Vertices are numbered tops first (t -> t), then bottoms (b -> n_top + b).
inline std::vector<std::uint32_t> adjacency(const Graph& g,
                                            std::optional<Colour> c) {
  const std::size_t nt = g.n_top();
  std::vector<std::uint32_t> adj(nt + g.n_bot(), 0);
  for (std::size_t t = 0; t < nt; ++t)
    for (std::size_t b = 0; b < g.n_bot(); ++b) {
      const bool on = c ? g.has_edge(t, b, *c) : g.has_edge(t, b);
      if (!on) continue;
      adj[t] |= 1u << (nt + b);
      adj[nt + b] |= 1u << t;
    }
  return adj;
}

inline int lowest(std::uint32_t s) { return __builtin_ctz(s); }

// reach[S]: endpoints v of paths that start at the lowest vertex of S, use
// only `adj` edges and visit exactly S.
inline std::vector<std::uint32_t> path_table(const std::vector<std::uint32_t>& adj) {
  const std::size_t nv = adj.size();
  std::vector<std::uint32_t> reach(std::size_t{1} << nv, 0);
  for (std::size_t v = 0; v < nv; ++v) reach[std::size_t{1} << v] = 1u << v;
  for (std::uint32_t s = 1; s < reach.size(); ++s) {
    std::uint32_t ends = reach[s];
    if (!ends) continue;
    const std::uint32_t above = ~((2u << lowest(s)) - 1);
    while (ends) {
      const int v = lowest(ends);
      ends &= ends - 1;
      std::uint32_t next = adj[v] & ~s & above;
      while (next) {
        const int u = lowest(next);
        next &= next - 1;
        reach[s | (1u << u)] |= 1u << u;
      }
    }
  }
  return reach;
}

// Whether S carries a cycle under the degenerate convention.
inline bool closes(const std::vector<std::uint32_t>& adj,
                   const std::vector<std::uint32_t>& reach, std::uint32_t s) {
  const int pc = __builtin_popcount(s);
  if (pc == 1) return true;
  const int start = lowest(s);
  if (pc == 2) return (adj[start] & s) != 0;
  return (reach[s] & adj[start]) != 0;
}

// Vertex order of a cycle on S (S must close).
inline std::vector<int> cycle_order(const std::vector<std::uint32_t>& adj,
                                    const std::vector<std::uint32_t>& reach,
                                    std::uint32_t s) {
  const int start = lowest(s);
  const int pc = __builtin_popcount(s);
  if (pc <= 2) {
    std::vector<int> out{start};
    if (pc == 2) out.push_back(lowest(s & (s - 1)));
    return out;
  }
  std::vector<int> rev;
  int v = lowest(reach[s] & adj[start]);
  std::uint32_t cur = s;
  while (v != start) {
    rev.push_back(v);
    cur &= ~(1u << v);
    v = lowest(reach[cur] & adj[v]);
  }
  rev.push_back(start);
  return {rev.rbegin(), rev.rend()};
}

inline Vertex vertex_of(const Graph& g, int v) {
  const auto u = static_cast<std::size_t>(v);
  return u < g.n_top() ? Vertex{Side::Top, u} : Vertex{Side::Bot, u - g.n_top()};
}

}  // namespace detail

/// Minimum number of vertex-disjoint monochromatic cycles (degenerate ones
/// included) partitioning V(g), with a witness; nullopt if above budget.
/// Dynamic programming over vertex subsets, each step fixing the cycle
/// through the lowest remaining vertex.
inline std::optional<std::pair<int, CyclePartition>> min_cycle_partition_exact(
    const Graph& g, int budget) {
  if (budget <= 0) throw InvalidInput("budget must be positive");
  const std::size_t nv = g.n_top() + g.n_bot();
  if (nv > kCycleOracleCeiling)
    throw ResourceLimit("cycle oracle limited to " +
                        std::to_string(kCycleOracleCeiling) + " vertices");
  if (nv == 0) return std::pair{0, CyclePartition{}};

  const std::size_t subsets = std::size_t{1} << nv;
  std::array<std::vector<std::uint32_t>, 3> adj, reach;
  // closing colour of each subset, 3 if none
  std::vector<std::uint8_t> cyc(subsets, 3);
  for (auto c : kColours) {
    const std::size_t ci = index_of(c);
    adj[ci] = detail::adjacency(g, c);
    reach[ci] = detail::path_table(adj[ci]);
    for (std::uint32_t s = 1; s < subsets; ++s)
      if (cyc[s] == 3 && detail::closes(adj[ci], reach[ci], s))
        cyc[s] = static_cast<std::uint8_t>(ci);
  }

  constexpr std::uint8_t kUnset = 0xFF;
  std::vector<std::uint8_t> best(subsets, kUnset);
  std::vector<std::uint32_t> choice(subsets, 0);
  best[0] = 0;
  for (std::uint32_t s = 1; s < subsets; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    // Enumerate T = low ∪ sub for every sub ⊆ rest.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t t = sub | low;
      if (cyc[t] != 3 && best[s ^ t] != kUnset &&
          (best[s] == kUnset || best[s ^ t] + 1 < best[s])) {
        best[s] = static_cast<std::uint8_t>(best[s ^ t] + 1);
        choice[s] = t;
      }
      if (sub == 0) break;
    }
  }
  const std::uint32_t all = static_cast<std::uint32_t>(subsets - 1);
  if (best[all] > budget) return std::nullopt;

  CyclePartition part;
  for (std::uint32_t s = all; s != 0; s ^= choice[s]) {
    const std::uint32_t t = choice[s];
    const std::size_t ci = cyc[t];
    Cycle cy{colour_at(ci), {}};
    for (int v : detail::cycle_order(adj[ci], reach[ci], t))
      cy.vertices.push_back(detail::vertex_of(g, v));
    part.cycles.push_back(std::move(cy));
  }
  return std::pair{static_cast<int>(best[all]), part};
}

inline constexpr std::size_t kHamiltonCeiling = 8;

/// Hamiltonicity of the present edges of g (colours ignored). Both sides must
/// be equal; a single edge counts as a Hamiltonian cycle of K_{1,1}.
inline bool is_hamiltonian(const Graph& g) {
  if (!g.is_balanced()) return false;
  if (g.n_top() == 0) return true;
  if (g.n_top() > kHamiltonCeiling)
    throw ResourceLimit("Hamiltonicity check too large");
  const auto adj = detail::adjacency(g, std::nullopt);
  const auto reach = detail::path_table(adj);
  const std::uint32_t all = (1u << adj.size()) - 1;
  return detail::closes(adj, reach, all);
}

/// Whether every balanced induced subgraph with at least ceil((1-ε)n)
/// vertices per side is Hamiltonian.
inline bool is_eps_hamiltonian(const Graph& g, double eps) {
  if (!g.is_balanced()) throw InvalidInput("graph is not balanced");
  const std::size_t n = g.n_top();
  if (n > kHamiltonCeiling)
    throw ResourceLimit("eps-Hamiltonicity limited to n <= " +
                        std::to_string(kHamiltonCeiling));
  if (n == 0) return true;
  const double raw = std::ceil((1.0 - eps) * static_cast<double>(n) - 1e-9);
  const std::size_t m0 =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::max(raw, 0.0)));

  const auto adj = detail::adjacency(g, std::nullopt);
  const auto reach = detail::path_table(adj);
  const std::uint32_t side = (1u << n) - 1;
  for (std::uint32_t a = 1; a <= side; ++a) {
    const auto ka = static_cast<std::size_t>(__builtin_popcount(a));
    if (ka < m0) continue;
    for (std::uint32_t b = 1; b <= side; ++b) {
      if (static_cast<std::size_t>(__builtin_popcount(b)) != ka) continue;
      if (!detail::closes(adj, reach, a | (b << n))) return false;
    }
  }
  return true;
}

}  // namespace monopart

#endif  // MONOPART_ORACLE_HPP
