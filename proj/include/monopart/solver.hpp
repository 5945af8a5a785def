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

#ifndef MONOPART_SOLVER_HPP
#define MONOPART_SOLVER_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monopart/components.hpp"
#include "monopart/cover.hpp"
#include "monopart/errors.hpp"
#include "monopart/figure4.hpp"
#include "monopart/graph.hpp"
#include "monopart/matching.hpp"
#include "monopart/oracle.hpp"
#include "monopart/structure.hpp"
#include "monopart/trace.hpp"
#include "monopart/two_colour.hpp"

namespace monopart {

enum class SolveMode { ProofGuided, Exact, Auto };

struct SolveOptions {
  SolveMode mode = SolveMode::Auto;
  // Auto falls back to the exact oracle only up to this many vertices a side.
  std::size_t exact_ceiling = 10;
};

struct SolveResult {
  Cover cover;
  SolveTrace trace;
  // colour_map[k] is the input colour behind solver colour k.
  std::array<Colour, 3> colour_map{Colour::Red, Colour::Green, Colour::Blue};

  friend bool operator==(const SolveResult&, const SolveResult&) = default;
};

namespace detail {

using Matchings = std::vector<ConnectedMatching>;

/// Colour relabelling applied before solving: solver colour k is input
/// colour map[k]. Colours are ordered by descending number of non-trivial
/// components, ties broken by the larger edge-indicator string.
inline std::array<Colour, 3> canonical_colour_map(const Graph& g) {
  const ComponentAtlas atlas(g);
  std::array<Colour, 3> order = kColours;
  auto indicator = [&](Colour c) {
    std::vector<char> bits(g.n_top() * g.n_bot());
    for (std::size_t t = 0; t < g.n_top(); ++t)
      for (std::size_t b = 0; b < g.n_bot(); ++b)
        bits[t * g.n_bot() + b] = g.has_edge(t, b, c) ? 1 : 0;
    return bits;
  };
  std::array<std::vector<char>, 3> ind{indicator(Colour::Red),
                                       indicator(Colour::Green),
                                       indicator(Colour::Blue)};
  std::stable_sort(order.begin(), order.end(), [&](Colour a, Colour b) {
    const auto na = atlas[a].non_trivial_count();
    const auto nb = atlas[b].non_trivial_count();
    if (na != nb) return na > nb;
    return ind[index_of(a)] > ind[index_of(b)];
  });
  return order;
}

inline std::array<Colour, 3> inverse_map(const std::array<Colour, 3>& map) {
  std::array<Colour, 3> inv{};
  for (std::size_t k = 0; k < 3; ++k) inv[index_of(map[k])] = colour_at(k);
  return inv;
}

inline Matchings recolour(Matchings ms, const std::array<Colour, 3>& map) {
  for (auto& m : ms) {
    m.colour = map[index_of(m.colour)];
    m.component_id.reset();
  }
  return ms;
}

inline VertexMask without(const VertexMask& mask, const Matchings& ms) {
  VertexMask out = mask;
  for (const auto& m : ms) out.remove(m.pairs);
  return out;
}

inline void push_non_empty(Matchings& ms, Colour c, Matching m) {
  if (!m.empty()) ms.push_back({c, std::move(m), std::nullopt});
}

// Two-colour cover of a residue, or nullopt if it uses all three colours.
inline std::optional<Matchings> finish_two(const Graph& g, const VertexMask& mask,
                                           bool swap) {
  if (mask.empty()) return Matchings{};
  std::pair<Colour, Colour> cs;
  try {
    cs = colours_used(g, mask);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
  return two_colour_cover_within(g, mask, cs.first, cs.second, swap);
}

inline std::optional<Cover> accept(const Graph& g, const Matchings& ms) {
  Cover cov = make_cover(g, ms);
  if (cov.non_empty_count() > 5 || !verify_cover(g, cov, true).ok())
    return std::nullopt;
  return cov;
}

inline Matchings concat(Matchings a, const Matchings& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Merges two matchings of one colour when they lie in the same component of
// g; returns true if a merge happened.
inline bool merge_same_component(const Graph& g, Matchings& ms) {
  const ComponentAtlas atlas(g);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (ms[i].colour != ms[j].colour || ms[i].empty() || ms[j].empty()) continue;
      const auto& map = atlas[ms[i].colour];
      if (map.of_top[ms[i].pairs[0].first] != map.of_top[ms[j].pairs[0].first])
        continue;
      ms[i].pairs.insert(ms[i].pairs.end(), ms[j].pairs.begin(), ms[j].pairs.end());
      ms.erase(ms.begin() + static_cast<std::ptrdiff_t>(j));
      return true;
    }
  return false;
}

// A colour with at most two non-trivial components: maximum matchings in
// them leave a residue without that colour, which two_colour_cover finishes.
inline std::optional<Cover> claim1_stage(const Graph& h, SolveTrace& trace) {
  const ComponentAtlas atlas(h);
  const auto all = VertexMask::all(h);
  for (auto c : kColours) {
    const auto big = atlas[c].non_trivial();
    if (big.size() > 2) continue;
    Matchings ms;
    VertexMask left = all;
    for (const auto* comp : big) {
      Matching m = max_matching_in(h, *comp, left);
      left.remove(m);
      push_non_empty(ms, c, std::move(m));
    }
    auto rest = finish_two(h, left, false);
    if (!rest) continue;
    if (auto cov = accept(h, concat(ms, *rest))) {
      trace.add(Stage::Claim1Branch,
                std::string("colour ") + colour_char(c) + " has " +
                    std::to_string(big.size()) + " non-trivial components",
                cov->matchings);
      return cov;
    }
  }
  trace.add(Stage::Claim1Branch, "skipped: every colour has >= 3 non-trivial components");
  return std::nullopt;
}

// Two components R, B of distinct colours spanning the graph.
inline std::optional<Cover> claim2_construct(const Graph& h, const MonoComponent& r,
                                             const MonoComponent& b,
                                             std::string& how) {
  const auto all = VertexMask::all(h);
  Matchings base;
  Matching mr = max_matching_in(h, r, all);
  VertexMask left = all;
  left.remove(mr);
  Matching mb = max_matching_in(h, b, left);
  left.remove(mb);
  push_non_empty(base, r.colour, std::move(mr));
  push_non_empty(base, b.colour, std::move(mb));
  Colour third = Colour::Red;
  for (auto c : kColours)
    if (c != r.colour && c != b.colour) third = c;

  // Green components of the residue meeting an edge between B' and R'.
  const VertexMask in_r = VertexMask::of(h, r.top, r.bot);
  const VertexMask in_b = VertexMask::of(h, b.top, b.bot);
  const ComponentMap greens(h, third, left);
  std::vector<std::size_t> chosen;
  for (std::size_t t = 0; t < h.n_top(); ++t) {
    if (!left.top[t]) continue;
    for (std::size_t v = 0; v < h.n_bot(); ++v) {
      if (!left.bot[v] || !h.has_edge(t, v, third)) continue;
      const bool cross = (in_b.top[t] && in_r.bot[v]) || (in_r.top[t] && in_b.bot[v]);
      if (!cross) continue;
      const std::size_t id = greens.of_top[t];
      if (std::find(chosen.begin(), chosen.end(), id) == chosen.end())
        chosen.push_back(id);
    }
  }
  if (chosen.size() <= 2) {
    Matchings with_green = base;
    VertexMask rest = left;
    for (auto id : chosen) {
      Matching m = max_matching_in(h, greens.list[id], rest);
      rest.remove(m);
      push_non_empty(with_green, third, std::move(m));
    }
    if (auto fin = finish_two(h, rest, false))
      if (auto cov = accept(h, concat(with_green, *fin))) {
        how = std::to_string(chosen.size()) + " cross matchings";
        return cov;
      }
  }
  if (auto fin = finish_two(h, left, false))
    if (auto cov = accept(h, concat(base, *fin))) {
      how = "residue two-coloured";
      return cov;
    }
  return std::nullopt;
}

inline std::optional<Cover> claim2_stage(const Graph& h, SolveTrace& trace) {
  const ComponentAtlas atlas(h);
  std::vector<const MonoComponent*> big;
  for (auto c : kColours)
    for (const auto* comp : atlas[c].non_trivial()) big.push_back(comp);
  const std::size_t nt = h.n_top(), nb = h.n_bot();
  bool spanning_pair = false;
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      const auto& x = *big[i];
      const auto& y = *big[j];
      if (x.colour == y.colour) continue;
      if (detail::set_union(x.top, y.top).size() != nt ||
          detail::set_union(x.bot, y.bot).size() != nb)
        continue;
      spanning_pair = true;
      for (int order = 0; order < 2; ++order) {
        const auto& r = order == 0 ? x : y;
        const auto& b = order == 0 ? y : x;
        std::string how;
        if (auto cov = claim2_construct(h, r, b, how)) {
          trace.add(Stage::Claim2Branch,
                    std::string(1, colour_char(r.colour)) + std::to_string(r.id) +
                        " + " + colour_char(b.colour) + std::to_string(b.id) +
                        " span; " + how,
                    cov->matchings);
          return cov;
        }
      }
    }
  trace.add(Stage::Claim2Branch, spanning_pair
                                     ? "skipped: spanning pairs gave no five-cover"
                                     : "skipped: no two components span");
  return std::nullopt;
}

// A colour with exactly three non-trivial components: a maximum matching in
// each, then the residue (which lacks that colour) via two_colour_cover,
// merging two same-coloured residue matchings when they share a component.
inline std::optional<Cover> split_residue_stage(const Graph& h, SolveTrace& trace) {
  const ComponentAtlas atlas(h);
  const auto all = VertexMask::all(h);
  bool any = false;
  for (auto c : kColours) {
    const auto big = atlas[c].non_trivial();
    if (big.size() != 3) continue;
    any = true;
    Matchings ms;
    VertexMask left = all;
    for (const auto* comp : big) {
      Matching m = max_matching_in(h, *comp, left);
      left.remove(m);
      push_non_empty(ms, c, std::move(m));
    }
    for (bool swap : {false, true}) {
      auto rest = finish_two(h, left, swap);
      if (!rest) break;
      Matchings cand = concat(ms, *rest);
      std::string how = "residue covered";
      if (cand.size() > 5 && merge_same_component(h, cand))
        how = "residue split; merged matchings sharing a component";
      if (auto cov = accept(h, cand)) {
        trace.add(Stage::SplitResidue,
                  std::string("colour ") + colour_char(c) + ": " + how +
                      (swap ? " (swapped roles)" : ""),
                  cov->matchings);
        return cov;
      }
    }
  }
  trace.add(Stage::SplitResidue, any ? "skipped: residue split into distinct components"
                                     : "skipped: no colour has exactly 3 non-trivial components");
  return std::nullopt;
}

inline std::optional<Cover> figure4_stage(const Graph& h, SolveTrace& trace) {
  const auto emb = detect_figure4(h);
  if (!emb) {
    trace.add(Stage::Figure4Terminal, "skipped: not a figure-4 configuration");
    return std::nullopt;
  }
  const Graph f = figure4_family(emb->spec);
  SolveTrace inner;
  Cover local;
  try {
    local = figure4_cover(emb->spec, f, &inner);
  } catch (const PipelineIncomplete&) {
    trace.add(Stage::Figure4Terminal, "skipped: no routing found");
    return std::nullopt;
  }
  auto cov = accept(h, lift_figure4(*emb, local.matchings));
  std::string branch = "configuration";
  for (const auto& st : inner.stages) branch += "; " + st.branch;
  if (cov) trace.add(Stage::Figure4Terminal, branch, cov->matchings);
  return cov;
}

inline std::optional<Cover> exact_stage(const Graph& h, SolveTrace& trace) {
  auto res = min_matching_cover_exact(h, 5);
  if (!res) return std::nullopt;
  trace.add(Stage::ExactFallback, "oracle minimum " + std::to_string(res->first),
            res->second.matchings);
  return res->second;
}

}  // namespace detail

/// Partition of a complete balanced 3-coloured graph into at most five
/// connected matchings. ProofGuided runs the constructive stages and throws
/// PipelineIncomplete if none applies; Exact uses the oracle; Auto runs the
/// stages and falls back to the oracle up to `exact_ceiling`.
inline SolveResult three_colour_cover(const Graph& g, SolveOptions opt = {}) {
  if (!g.is_complete()) throw InvalidInput("graph is not complete");
  if (!g.is_balanced()) throw InvalidInput("graph is not balanced");

  SolveResult res;
  if (g.n_top() == 0) return res;
  res.colour_map = detail::canonical_colour_map(g);
  const Graph h = g.recoloured(detail::inverse_map(res.colour_map));

  std::optional<Cover> found;
  if (opt.mode == SolveMode::Exact) {
    found = detail::exact_stage(h, res.trace);
  } else {
    found = detail::claim1_stage(h, res.trace);
    if (!found) found = detail::claim2_stage(h, res.trace);
    if (!found) found = detail::split_residue_stage(h, res.trace);
    if (!found) found = detail::figure4_stage(h, res.trace);
    if (!found) {
      if (opt.mode == SolveMode::ProofGuided)
        throw PipelineIncomplete("no proof-guided stage applies");
      if (g.n_top() > opt.exact_ceiling)
        throw PipelineIncomplete("no proof-guided stage applies and n = " +
                                 std::to_string(g.n_top()) +
                                 " exceeds the exact ceiling");
      found = detail::exact_stage(h, res.trace);
    }
  }
  if (!found) throw PipelineIncomplete("no cover with at most five matchings found");

  for (auto& st : res.trace.stages)
    st.matchings = detail::recolour(st.matchings, res.colour_map);
  res.cover = make_cover(g, detail::recolour(found->matchings, res.colour_map));
  if (res.cover.non_empty_count() > 5 || !verify_cover(g, res.cover, true).ok())
    throw PipelineIncomplete("internal error: produced cover failed verification");
  return res;
}

}  // namespace monopart

#endif  // MONOPART_SOLVER_HPP
