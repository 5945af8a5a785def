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

#ifndef MONOPART_FIGURE4_HPP
#define MONOPART_FIGURE4_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "monopart/cover.hpp"
#include "monopart/errors.hpp"
#include "monopart/generators.hpp"
#include "monopart/graph.hpp"
#include "monopart/matching.hpp"
#include "monopart/trace.hpp"

namespace monopart {

/// weak[c][i]: component i of colour c has at most as many top as bottom
/// vertices. very_weak[c][i]: its top block is strictly smaller than each of
/// its two bottom blocks.
struct WeakIndexReport {
  std::array<std::array<bool, 3>, 3> weak{};
  std::array<std::array<bool, 3>, 3> very_weak{};

  bool any_weak(Colour c) const {
    const auto& w = weak[index_of(c)];
    return w[0] || w[1] || w[2];
  }
  bool weak_for_all(std::size_t i) const {
    return weak[0][i] && weak[1][i] && weak[2][i];
  }
  std::string describe() const {
    std::string s;
    for (auto c : kColours) {
      if (!s.empty()) s += ' ';
      s += colour_char(c);
      s += ':';
      for (std::size_t i = 0; i < 3; ++i) {
        if (!weak[index_of(c)][i]) continue;
        s += std::to_string(i + 1);
        if (very_weak[index_of(c)][i]) s += '*';
      }
    }
    return s;
  }
};

/// The two bottom blocks of component i in colour c.
inline std::array<std::size_t, 2> figure4_bottom_blocks(Colour c, std::size_t i) {
  std::array<std::size_t, 2> out{};
  std::size_t n = 0;
  for (std::size_t k = 0; k < 6; ++k)
    if (kBlockLabel[k][index_of(c)] == i) out[n++] = k;
  return out;
}

inline WeakIndexReport weak_indices(const Figure4Spec& s) {
  WeakIndexReport rep;
  for (auto c : kColours)
    for (std::size_t i = 0; i < 3; ++i) {
      const auto [k1, k2] = figure4_bottom_blocks(c, i);
      rep.weak[index_of(c)][i] = s.top[i] <= s.bot[k1] + s.bot[k2];
      rep.very_weak[index_of(c)][i] = s.top[i] < s.bot[k1] && s.top[i] < s.bot[k2];
    }
  return rep;
}

namespace detail {

// A connected matching slot of the configuration: the component of colour c
// whose top side is top block i.
struct Slot {
  Colour colour;
  std::size_t top;
};

inline std::size_t slot_code(const Slot& s) { return index_of(s.colour) * 3 + s.top; }

// Block-level transport: how many vertices of top block i go to bottom block
// k, using only (i, k) pairs whose slot is chosen. Full means every vertex is
// routed.
inline std::optional<std::array<std::array<std::size_t, 6>, 3>> route_blocks(
    const Figure4Spec& spec, const std::vector<Slot>& slots) {
  std::array<bool, 9> chosen{};
  for (const auto& s : slots) chosen[slot_code(s)] = true;
  // Nodes: 0 source, 1..3 top blocks, 4..9 bottom blocks, 10 sink.
  constexpr std::size_t kN = 11;
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::array<std::array<std::int64_t, kN>, kN> cap{};
  for (std::size_t i = 0; i < 3; ++i) {
    cap[0][1 + i] = static_cast<std::int64_t>(spec.top[i]);
    for (std::size_t k = 0; k < 6; ++k)
      if (chosen[index_of(figure4_colour(i, k)) * 3 + i]) cap[1 + i][4 + k] = kInf;
  }
  for (std::size_t k = 0; k < 6; ++k)
    cap[4 + k][10] = static_cast<std::int64_t>(spec.bot[k]);
  const auto original = cap;

  std::int64_t flow = 0;
  for (;;) {
    std::array<std::size_t, kN> prev;
    prev.fill(kN);
    prev[0] = 0;
    std::vector<std::size_t> queue{0};
    for (std::size_t q = 0; q < queue.size() && prev[10] == kN; ++q)
      for (std::size_t v = 0; v < kN; ++v)
        if (prev[v] == kN && cap[queue[q]][v] > 0) {
          prev[v] = queue[q];
          queue.push_back(v);
        }
    if (prev[10] == kN) break;
    std::int64_t push = kInf;
    for (std::size_t v = 10; v != 0; v = prev[v]) push = std::min(push, cap[prev[v]][v]);
    for (std::size_t v = 10; v != 0; v = prev[v]) {
      cap[prev[v]][v] -= push;
      cap[v][prev[v]] += push;
    }
    flow += push;
  }
  if (static_cast<std::size_t>(flow) != spec.n_top() || !spec.balanced())
    return std::nullopt;
  std::array<std::array<std::size_t, 6>, 3> out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 6; ++k)
      if (original[1 + i][4 + k] > 0)
        out[i][k] = static_cast<std::size_t>(original[1 + i][4 + k] - cap[1 + i][4 + k]);
  return out;
}

// Turns a block routing into concrete matchings, consuming block vertices in
// increasing index order. One matching per slot.
inline std::vector<ConnectedMatching> realize_routing(
    const Figure4Spec& spec, const std::array<std::array<std::size_t, 6>, 3>& flow) {
  const auto toff = top_offsets(spec);
  const auto boff = bot_offsets(spec);
  std::array<std::size_t, 3> tnext = toff;
  std::array<std::size_t, 6> bnext = boff;
  std::array<ConnectedMatching, 9> by_slot;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 6; ++k) {
      const Colour c = figure4_colour(i, k);
      auto& m = by_slot[index_of(c) * 3 + i];
      m.colour = c;
      for (std::size_t u = 0; u < flow[i][k]; ++u)
        m.pairs.emplace_back(tnext[i]++, bnext[k]++);
    }
  std::vector<ConnectedMatching> out;
  for (auto& m : by_slot)
    if (!m.empty()) out.push_back(std::move(m));
  return out;
}

inline std::string slots_text(const std::vector<Slot>& slots) {
  std::string s;
  for (const auto& x : slots) {
    if (!s.empty()) s += ',';
    s += colour_char(x.colour);
    s += std::to_string(x.top + 1);
  }
  return s;
}

}  // namespace detail

/// Partition of the terminal configuration `g` (which must equal
/// figure4_family(spec)) into at most five connected matchings. Tries, in
/// order: two indices weak for different colours (cross matchings plus one
/// matching per colour at the third index), two weak indices of one colour
/// (three matchings of that colour plus two at the remaining index), an index
/// weak for every colour (one matching at it plus four elsewhere), and finally
/// a search over all slot sets of size at most five.
inline Cover figure4_cover(const Figure4Spec& spec, const Graph& g,
                           SolveTrace* trace = nullptr) {
  if (!(g == figure4_family(spec)))
    throw InvalidInput("graph does not match the figure-4 spec");
  using detail::Slot;
  const WeakIndexReport weak = weak_indices(spec);
  if (trace) trace->add(Stage::Figure4Terminal, "weak " + weak.describe());

  auto attempt = [&](const std::string& branch,
                     const std::vector<Slot>& slots) -> std::optional<Cover> {
    const auto flow = detail::route_blocks(spec, slots);
    if (!flow) return std::nullopt;
    Cover cov = make_cover(g, detail::realize_routing(spec, *flow));
    if (cov.non_empty_count() > 5 || !verify_cover(g, cov, true).ok())
      return std::nullopt;
    if (trace)
      trace->add(Stage::Figure4Terminal, branch + " " + detail::slots_text(slots),
                 cov.matchings);
    return cov;
  };

  for (auto c : kColours)
    for (auto d : kColours) {
      if (c == d) continue;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          if (i == j || !weak.weak[index_of(c)][i] || !weak.weak[index_of(d)][j])
            continue;
          const std::size_t k = 3 - i - j;
          if (auto cov = attempt("WeakIndexCross",
                                 {{c, i}, {d, j}, {Colour::Red, k},
                                  {Colour::Green, k}, {Colour::Blue, k}}))
            return *cov;
        }
    }

  for (auto c : kColours) {
    const auto& w = weak.weak[index_of(c)];
    if (int(w[0]) + int(w[1]) + int(w[2]) < 2) continue;
    for (std::size_t k = 0; k < 3; ++k) {
      std::vector<Slot> slots{{c, 0}, {c, 1}, {c, 2}};
      for (auto d : kColours)
        if (d != c) slots.push_back({d, k});
      if (auto cov = attempt("TwoWeakSameColour", slots)) return *cov;
    }
  }

  for (std::size_t i = 0; i < 3; ++i) {
    if (!weak.weak_for_all(i)) continue;
    std::vector<Slot> others;
    for (auto d : kColours)
      for (std::size_t j = 0; j < 3; ++j)
        if (j != i) others.push_back({d, j});
    for (auto c : kColours)
      for (unsigned sub = 0; sub < (1u << others.size()); ++sub) {
        if (__builtin_popcount(sub) != 4) continue;
        std::vector<Slot> slots{{c, i}};
        for (std::size_t q = 0; q < others.size(); ++q)
          if (sub >> q & 1) slots.push_back(others[q]);
        if (auto cov = attempt("CommonWeakIndex", slots)) return *cov;
      }
  }

  for (int size = 0; size <= 5; ++size)
    for (unsigned sub = 0; sub < (1u << 9); ++sub) {
      if (__builtin_popcount(sub) != size) continue;
      std::vector<Slot> slots;
      for (std::size_t q = 0; q < 9; ++q)
        if (sub >> q & 1) slots.push_back({colour_at(q / 3), q % 3});
      if (auto cov = attempt("BlockSearch", slots)) return *cov;
    }
  throw PipelineIncomplete("no five-matching routing of the figure-4 blocks");
}

/// A figure-4 configuration found inside a complete graph: `spec` together
/// with the host vertex behind each configuration vertex. When `transposed`
/// is set, configuration tops are host bottoms and vice versa.
struct Figure4Embedding {
  Figure4Spec spec;
  IndexSet top_map;
  IndexSet bot_map;
  bool transposed = false;
};

namespace detail {

inline std::optional<Figure4Embedding> detect_oriented(const Graph& h) {
  if (!h.is_complete() || !h.is_balanced()) return std::nullopt;
  const auto rows = h.rows();
  std::vector<std::size_t> rep;  // first top vertex of each row type
  std::vector<std::size_t> type(h.n_top());
  for (std::size_t t = 0; t < h.n_top(); ++t) {
    std::size_t k = 0;
    while (k < rep.size() && rows[rep[k]] != rows[t]) ++k;
    if (k == rep.size()) {
      if (rep.size() == 3) return std::nullopt;
      rep.push_back(t);
    }
    type[t] = k;
  }
  if (rep.size() != 3) return std::nullopt;
  std::vector<std::size_t> block(h.n_bot());
  for (std::size_t b = 0; b < h.n_bot(); ++b) {
    std::array<std::size_t, 3> label{3, 3, 3};  // colour -> type
    for (std::size_t i = 0; i < 3; ++i) {
      const std::size_t c = h.cell(rep[i], b);
      if (label[c] != 3) return std::nullopt;
      label[c] = i;
    }
    std::size_t k = 0;
    while (kBlockLabel[k] != label) ++k;
    block[b] = k;
  }
  Figure4Embedding emb;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t t = 0; t < h.n_top(); ++t)
      if (type[t] == i) {
        emb.top_map.push_back(t);
        ++emb.spec.top[i];
      }
  for (std::size_t k = 0; k < 6; ++k)
    for (std::size_t b = 0; b < h.n_bot(); ++b)
      if (block[b] == k) {
        emb.bot_map.push_back(b);
        ++emb.spec.bot[k];
      }
  return emb;
}

}  // namespace detail

/// Recognizes complete graphs whose top vertices have exactly three distinct
/// colour rows and whose columns are rainbow on them (in either orientation).
inline std::optional<Figure4Embedding> detect_figure4(const Graph& g) {
  if (auto e = detail::detect_oriented(g)) return e;
  if (auto e = detail::detect_oriented(g.transposed())) {
    e->transposed = true;
    return e;
  }
  return std::nullopt;
}

/// Maps matchings on figure4_family(emb.spec) back to host vertex indices.
inline std::vector<ConnectedMatching> lift_figure4(const Figure4Embedding& emb,
                                                   const std::vector<ConnectedMatching>& ms) {
  std::vector<ConnectedMatching> out;
  for (const auto& m : ms) {
    ConnectedMatching lifted{m.colour, {}, std::nullopt};
    for (const auto& [t, b] : m.pairs) {
      const std::size_t ht = emb.top_map[t];
      const std::size_t hb = emb.bot_map[b];
      lifted.pairs.push_back(emb.transposed ? Edge{hb, ht} : Edge{ht, hb});
    }
    out.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace monopart

#endif  // MONOPART_FIGURE4_HPP
