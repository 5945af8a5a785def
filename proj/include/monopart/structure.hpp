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

#ifndef MONOPART_STRUCTURE_HPP
#define MONOPART_STRUCTURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monopart/components.hpp"
#include "monopart/errors.hpp"
#include "monopart/graph.hpp"

namespace monopart {

namespace detail {
// Absolute slack for comparisons of vertex counts against fractional bounds.
inline constexpr double kTol = 1e-9;

inline bool at_least(double x, double y) { return x >= y - kTol; }
inline bool above(double x, double y) { return x > y + kTol; }

inline std::size_t count_in(const IndexSet& s, const std::vector<char>& flags) {
  std::size_t k = 0;
  for (auto v : s) k += flags[v] ? 1 : 0;
  return k;
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Exact two-colour classification

/// Witness for the component structure of a complete 2-coloured graph.
/// Spanning: witness = {S}. VColouring: witness = {R, B} with R in the first
/// colour and B in the second; full_side names the bipart contained in R∩B.
/// Split: witness = {R1, R2, B1, B2}.
struct TwoColourClass {
  enum class Kind { Spanning, VColouring, Split };

  Kind kind = Kind::Spanning;
  std::vector<MonoComponent> witness;
  Side full_side = Side::Top;
};

inline const char* kind_name(TwoColourClass::Kind k) {
  switch (k) {
    case TwoColourClass::Kind::Spanning: return "Spanning";
    case TwoColourClass::Kind::VColouring: return "VColouring";
    case TwoColourClass::Kind::Split: return "Split";
  }
  return "?";
}

/// Which of the three structural cases hold (they may overlap).
struct TwoColourCases {
  bool spanning = false;
  bool v_colouring = false;
  bool split = false;
};

namespace detail {

inline void require_two_coloured(const Graph& g, const VertexMask& mask,
                                 Colour c1, Colour c2, bool allow_absent) {
  if (c1 == c2) throw InvalidInput("the two colours must differ");
  for (std::size_t t = 0; t < g.n_top(); ++t) {
    if (!mask.top[t]) continue;
    for (std::size_t b = 0; b < g.n_bot(); ++b) {
      if (!mask.bot[b]) continue;
      const auto c = g.colour(t, b);
      if (!c) {
        if (allow_absent) continue;
        throw InvalidInput("graph is not complete");
      }
      if (*c != c1 && *c != c2)
        throw InvalidInput(std::string("edge of third colour ") +
                           colour_char(*c) + " present");
    }
  }
}

struct TwoColourScan {
  std::optional<TwoColourClass> spanning, v_colouring, split;
};

inline TwoColourScan scan_two(const Graph& g, const VertexMask& mask, Colour c1,
                              Colour c2) {
  const std::size_t nt = mask.count_top();
  const std::size_t nb = mask.count_bot();
  const auto k1 = components_within(g, c1, mask);
  const auto k2 = components_within(g, c2, mask);
  TwoColourScan out;

  for (const auto* list : {&k1, &k2}) {
    for (const auto& comp : *list)
      if (comp.top.size() == nt && comp.bot.size() == nb) {
        out.spanning = TwoColourClass{TwoColourClass::Kind::Spanning, {comp}};
        break;
      }
    if (out.spanning) break;
  }

  for (const auto& r : k1) {
    if (!r.non_trivial() || out.v_colouring) continue;
    for (const auto& b : k2) {
      if (!b.non_trivial()) continue;
      if (set_union(r.top, b.top).size() != nt ||
          set_union(r.bot, b.bot).size() != nb)
        continue;
      std::optional<Side> full;
      if (set_intersection(r.top, b.top).size() == nt) full = Side::Top;
      else if (set_intersection(r.bot, b.bot).size() == nb) full = Side::Bot;
      if (!full) continue;
      out.v_colouring =
          TwoColourClass{TwoColourClass::Kind::VColouring, {r, b}, *full};
      break;
    }
  }

  auto all_non_trivial = [](const std::vector<MonoComponent>& k) {
    return std::all_of(k.begin(), k.end(),
                       [](const MonoComponent& x) { return x.non_trivial(); });
  };
  if (k1.size() == 2 && k2.size() == 2 && all_non_trivial(k1) &&
      all_non_trivial(k2))
    out.split = TwoColourClass{TwoColourClass::Kind::Split,
                               {k1[0], k1[1], k2[0], k2[1]}};
  return out;
}

}  // namespace detail

/// Classification of the subgraph induced by `mask`, which must be complete
/// and use only colours c1, c2. Cases are tried in the order Spanning,
/// VColouring, Split.
inline TwoColourClass classify_two_within(const Graph& g, const VertexMask& mask,
                                          Colour c1, Colour c2) {
  detail::require_two_coloured(g, mask, c1, c2, false);
  if (mask.empty()) throw InvalidInput("cannot classify the empty graph");
  auto scan = detail::scan_two(g, mask, c1, c2);
  if (scan.spanning) return *scan.spanning;
  if (scan.v_colouring) return *scan.v_colouring;
  if (scan.split) return *scan.split;
  throw InvalidInput("trivial graph with more than one vertex has no spanning "
                     "structure");
}

inline TwoColourClass classify_two(const Graph& g, Colour c1, Colour c2) {
  return classify_two_within(g, VertexMask::all(g), c1, c2);
}

/// All cases that hold, for overlap statistics.
inline TwoColourCases two_colour_cases(const Graph& g, Colour c1, Colour c2) {
  const auto mask = VertexMask::all(g);
  detail::require_two_coloured(g, mask, c1, c2, false);
  auto scan = detail::scan_two(g, mask, c1, c2);
  return {scan.spanning.has_value(), scan.v_colouring.has_value(),
          scan.split.has_value()};
}

/// The two colours present in a 2-coloured graph, padded deterministically
/// when fewer are used. Throws InvalidInput if all three appear.
inline std::pair<Colour, Colour> colours_used(const Graph& g,
                                              const VertexMask& mask) {
  std::array<bool, 3> seen{};
  for (std::size_t t = 0; t < g.n_top(); ++t) {
    if (!mask.top[t]) continue;
    for (std::size_t b = 0; b < g.n_bot(); ++b)
      if (mask.bot[b] && g.has_edge(t, b)) seen[g.cell(t, b)] = true;
  }
  std::vector<Colour> used;
  for (auto c : kColours)
    if (seen[index_of(c)]) used.push_back(c);
  if (used.size() == 3) throw InvalidInput("all three colours present");
  for (auto c : kColours)
    if (used.size() < 2 && std::find(used.begin(), used.end(), c) == used.end())
      used.push_back(c);
  return {used[0], used[1]};
}

/// Re-checks a witness against the case definitions on freshly computed
/// components of g.
inline bool witness_holds(const Graph& g, const TwoColourClass& cls) {
  const std::size_t nt = g.n_top(), nb = g.n_bot();
  auto current = [&](const MonoComponent& w) {
    const auto list = components(g, w.colour);
    return w.id < list.size() && list[w.id] == w;
  };
  for (const auto& w : cls.witness)
    if (!current(w)) return false;
  switch (cls.kind) {
    case TwoColourClass::Kind::Spanning:
      return cls.witness.size() == 1 && cls.witness[0].top.size() == nt &&
             cls.witness[0].bot.size() == nb;
    case TwoColourClass::Kind::VColouring: {
      if (cls.witness.size() != 2) return false;
      const auto& r = cls.witness[0];
      const auto& b = cls.witness[1];
      if (r.colour == b.colour || !r.non_trivial() || !b.non_trivial()) return false;
      if (detail::set_union(r.top, b.top).size() != nt ||
          detail::set_union(r.bot, b.bot).size() != nb)
        return false;
      return cls.full_side == Side::Top
                 ? detail::set_intersection(r.top, b.top).size() == nt
                 : detail::set_intersection(r.bot, b.bot).size() == nb;
    }
    case TwoColourClass::Kind::Split: {
      if (cls.witness.size() != 4) return false;
      for (std::size_t i = 0; i < 4; i += 2) {
        const Colour c = cls.witness[i].colour;
        if (cls.witness[i + 1].colour != c || components(g, c).size() != 2) return false;
      }
      return std::all_of(cls.witness.begin(), cls.witness.end(),
                         [](const MonoComponent& x) { return x.non_trivial(); });
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Density predicates

inline double density(const Graph& g) {
  const std::size_t cells = g.n_top() * g.n_bot();
  if (cells == 0) return 1.0;
  return static_cast<double>(g.edge_count()) / static_cast<double>(cells);
}

inline bool is_gamma_dense(const Graph& g, double gamma) {
  return detail::at_least(density(g), gamma);
}

/// Every top vertex has degree > γ·n_bot and every bottom vertex degree
/// > γ·n_top (strict).
inline bool has_complete_degree(const Graph& g, double gamma) {
  for (std::size_t t = 0; t < g.n_top(); ++t)
    if (!detail::above(static_cast<double>(g.degree_top(t)),
                       gamma * static_cast<double>(g.n_bot())))
      return false;
  for (std::size_t b = 0; b < g.n_bot(); ++b)
    if (!detail::above(static_cast<double>(g.degree_bot(b)),
                       gamma * static_cast<double>(g.n_top())))
      return false;
  return true;
}

/// |top| ≥ γ·n_top and |bot| ≥ γ·n_bot.
inline bool is_gamma_nontrivial(const IndexSet& top, const IndexSet& bot,
                                const Graph& g, double gamma) {
  return detail::at_least(static_cast<double>(top.size()),
                          gamma * static_cast<double>(g.n_top())) &&
         detail::at_least(static_cast<double>(bot.size()),
                          gamma * static_cast<double>(g.n_bot()));
}

/// Induced subgraph together with the host indices of its vertices.
struct InducedSubgraph {
  Graph graph;
  IndexSet top;  // host index of each top vertex
  IndexSet bot;
  bool warning = false;  // more than √ε·n vertices were peeled on some side
};

/// Repeatedly removes every vertex whose degree is at most (1−2√ε) times the
/// current size of the opposite side, until no such vertex remains.
inline InducedSubgraph prune_to_complete_degree(const Graph& g, double eps) {
  const double theta = 1.0 - 2.0 * std::sqrt(eps);
  VertexMask alive = VertexMask::all(g);
  std::vector<std::size_t> deg_top(g.n_top()), deg_bot(g.n_bot());
  for (std::size_t t = 0; t < g.n_top(); ++t) deg_top[t] = g.degree_top(t);
  for (std::size_t b = 0; b < g.n_bot(); ++b) deg_bot[b] = g.degree_bot(b);
  std::size_t nt = g.n_top(), nb = g.n_bot();
  for (;;) {
    IndexSet drop_top, drop_bot;
    for (std::size_t t = 0; t < g.n_top(); ++t)
      if (alive.top[t] && !detail::above(static_cast<double>(deg_top[t]),
                                         theta * static_cast<double>(nb)))
        drop_top.push_back(t);
    for (std::size_t b = 0; b < g.n_bot(); ++b)
      if (alive.bot[b] && !detail::above(static_cast<double>(deg_bot[b]),
                                         theta * static_cast<double>(nt)))
        drop_bot.push_back(b);
    if (drop_top.empty() && drop_bot.empty()) break;
    for (auto t : drop_top) {
      alive.top[t] = 0;
      --nt;
      for (std::size_t b = 0; b < g.n_bot(); ++b)
        if (alive.bot[b] && g.has_edge(t, b)) --deg_bot[b];
    }
    for (auto b : drop_bot) {
      alive.bot[b] = 0;
      --nb;
      for (std::size_t t = 0; t < g.n_top(); ++t)
        if (alive.top[t] && g.has_edge(t, b)) --deg_top[t];
    }
  }
  InducedSubgraph out;
  out.top = alive.top_list();
  out.bot = alive.bot_list();
  out.graph = g.induced(out.top, out.bot);
  const double s = std::sqrt(eps);
  out.warning =
      detail::above(static_cast<double>(g.n_top() - out.top.size()),
                    s * static_cast<double>(g.n_top())) ||
      detail::above(static_cast<double>(g.n_bot() - out.bot.size()),
                    s * static_cast<double>(g.n_bot()));
  return out;
}

// ---------------------------------------------------------------------------
// Dense two-colour classification

struct DenseTwoColourClass {
  enum class Kind { Spanning, EpsV, EpsSplit };

  Kind kind = Kind::Spanning;
  std::vector<MonoComponent> witness;  // same layout as TwoColourClass
  Side full_side = Side::Top;
};

inline const char* kind_name(DenseTwoColourClass::Kind k) {
  switch (k) {
    case DenseTwoColourClass::Kind::Spanning: return "Spanning";
    case DenseTwoColourClass::Kind::EpsV: return "EpsV";
    case DenseTwoColourClass::Kind::EpsSplit: return "EpsSplit";
  }
  return "?";
}

/// Classification of a 2-coloured graph of (1−ε)-complete degree: a
/// (1−3ε)-spanning component, a 3ε-V-colouring, or a 2ε-split colouring,
/// tried in that order. For the split case, each colour must have exactly two
/// 2ε-non-trivial components and no other non-trivial ones.
inline DenseTwoColourClass classify_two_dense(const Graph& g, Colour c1,
                                              Colour c2, double eps) {
  const auto mask = VertexMask::all(g);
  detail::require_two_coloured(g, mask, c1, c2, true);
  if (!(eps < 1.0 / 6.0))
    throw PreconditionFailed("dense classification needs eps < 1/6");
  if (!has_complete_degree(g, 1.0 - eps))
    throw PreconditionFailed("graph lacks (1-eps)-complete degree");

  const double nt = static_cast<double>(g.n_top());
  const double nb = static_cast<double>(g.n_bot());
  const auto k1 = components(g, c1);
  const auto k2 = components(g, c2);

  for (const auto* list : {&k1, &k2})
    for (const auto& comp : *list)
      if (is_gamma_nontrivial(comp.top, comp.bot, g, 1.0 - 3.0 * eps))
        return {DenseTwoColourClass::Kind::Spanning, {comp}};

  const double e3 = 3.0 * eps;
  for (const auto& r : k1) {
    if (!is_gamma_nontrivial(r.top, r.bot, g, e3)) continue;
    for (const auto& b : k2) {
      if (!is_gamma_nontrivial(b.top, b.bot, g, e3)) continue;
      if (!is_gamma_nontrivial(detail::set_union(r.top, b.top),
                               detail::set_union(r.bot, b.bot), g, 1.0 - e3))
        continue;
      const double it = static_cast<double>(
          detail::set_intersection(r.top, b.top).size());
      const double ib = static_cast<double>(
          detail::set_intersection(r.bot, b.bot).size());
      if (detail::at_least(it, (1.0 - e3) * nt))
        return {DenseTwoColourClass::Kind::EpsV, {r, b}, Side::Top};
      if (detail::at_least(ib, (1.0 - e3) * nb))
        return {DenseTwoColourClass::Kind::EpsV, {r, b}, Side::Bot};
    }
  }

  auto two_big = [&](const std::vector<MonoComponent>& k)
      -> std::optional<std::pair<MonoComponent, MonoComponent>> {
    std::vector<const MonoComponent*> big;
    for (const auto& x : k) {
      if (!x.non_trivial()) continue;
      if (!is_gamma_nontrivial(x.top, x.bot, g, 2.0 * eps)) return std::nullopt;
      big.push_back(&x);
    }
    if (big.size() != 2) return std::nullopt;
    return std::pair{*big[0], *big[1]};
  };
  const auto s1 = two_big(k1);
  const auto s2 = two_big(k2);
  if (s1 && s2)
    return {DenseTwoColourClass::Kind::EpsSplit,
            {s1->first, s1->second, s2->first, s2->second}};
  throw PipelineIncomplete("no dense two-colour structure found");
}

// ---------------------------------------------------------------------------
// Spanning component search

/// A minimum-cardinality set of at most k monochromatic components (over all
/// three colours) whose union contains every vertex, or nullopt. Among sets
/// of equal size the lexicographically smallest by (colour, id) is returned.
inline std::optional<std::vector<MonoComponent>> find_spanning_components(
    const Graph& g, int k) {
  if (k <= 0) throw InvalidInput("k must be positive");
  std::vector<MonoComponent> all;
  for (auto c : kColours)
    for (auto& comp : components(g, c)) all.push_back(std::move(comp));

  const std::size_t nv = g.n_top() + g.n_bot();
  const std::size_t words = (nv + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(all.size(),
                                               std::vector<std::uint64_t>(words));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto t : all[i].top) bits[i][t / 64] |= std::uint64_t{1} << (t % 64);
    for (auto b : all[i].bot) {
      const std::size_t v = g.n_top() + b;
      bits[i][v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  std::vector<std::uint64_t> full(words, ~std::uint64_t{0});
  if (nv % 64 != 0) full.back() = (std::uint64_t{1} << (nv % 64)) - 1;
  if (nv == 0) return std::vector<MonoComponent>{};

  std::vector<std::size_t> pick;
  std::vector<std::vector<std::uint64_t>> acc;
  auto search = [&](auto&& self, std::size_t from, std::size_t size) -> bool {
    if (pick.size() == size) return acc.back() == full;
    for (std::size_t i = from; i < all.size(); ++i) {
      auto next = acc.empty() ? std::vector<std::uint64_t>(words) : acc.back();
      for (std::size_t w = 0; w < words; ++w) next[w] |= bits[i][w];
      pick.push_back(i);
      acc.push_back(std::move(next));
      if (self(self, i + 1, size)) return true;
      pick.pop_back();
      acc.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= static_cast<std::size_t>(k); ++size) {
    if (size > all.size()) break;
    if (search(search, 0, size)) {
      std::vector<MonoComponent> out;
      for (auto i : pick) out.push_back(all[i]);
      return out;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Dense parameters

/// Constants of the robust cover, ordered eps < delta < gamma < rho.
struct DenseParams {
  double eps = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
  double rho = 0.0;

  /// delta = eps^(1/3), gamma = eps^(1/6), rho = eps^(1/12).
  static DenseParams from_eps(double eps) {
    return {eps, std::pow(eps, 1.0 / 3.0), std::pow(eps, 1.0 / 6.0),
            std::pow(eps, 1.0 / 12.0)};
  }
};

}  // namespace monopart

#endif  // MONOPART_STRUCTURE_HPP
