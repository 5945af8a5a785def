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

#ifndef MONOPART_CANONICAL_HPP
#define MONOPART_CANONICAL_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "monopart/errors.hpp"
#include "monopart/graph.hpp"

namespace monopart {

inline constexpr std::size_t kCanonicalCeiling = 8;

/// Canonical byte string of a colouring under vertex permutations on each
/// side, bipart swap (balanced graphs only) and colour permutations.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

inline constexpr std::array<std::array<std::uint8_t, 3>, 6> kColourPerms{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

// Row codes (2 bits per cell, column 0 most significant) of a graph after
// permuting colours by tau and columns by sigma; sorted ascending so that row
// order does not matter.
inline void transformed_rows(const Graph& g, const std::array<std::uint8_t, 3>& tau,
                             const std::vector<std::size_t>& sigma,
                             std::vector<std::uint32_t>& out) {
  out.assign(g.n_top(), 0);
  for (std::size_t t = 0; t < g.n_top(); ++t) {
    std::uint32_t code = 0;
    for (std::size_t j = 0; j < g.n_bot(); ++j) {
      const std::uint8_t v = g.cell(t, sigma[j]);
      code = code << 2 | (v == Graph::kAbsent ? 3u : tau[v]);
    }
    out[t] = code;
  }
  std::sort(out.begin(), out.end());
}

inline std::vector<Graph> orientations(const Graph& g) {
  if (g.n_top() < g.n_bot()) return {g};
  if (g.n_top() > g.n_bot()) return {g.transposed()};
  return {g, g.transposed()};
}

// Calls f(rows) for every group element applied to g.
template <typename F>
void for_each_image(const Graph& g, F&& f) {
  std::vector<std::uint32_t> rows;
  for (const Graph& h : orientations(g)) {
    std::vector<std::size_t> sigma(h.n_bot());
    for (const auto& tau : kColourPerms) {
      std::iota(sigma.begin(), sigma.end(), std::size_t{0});
      do {
        transformed_rows(h, tau, sigma, rows);
        f(static_cast<const std::vector<std::uint32_t>&>(rows));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
}

inline std::uint64_t fnv1a(const std::vector<std::uint8_t>& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto x : bytes) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace detail

/// Lexicographically least sorted row-code list over the whole group.
inline CanonicalForm canonical_form(const Graph& g) {
  if (g.n_top() > kCanonicalCeiling || g.n_bot() > kCanonicalCeiling)
    throw ResourceLimit("canonical form limited to sides <= " +
                        std::to_string(kCanonicalCeiling));
  std::vector<std::uint32_t> best;
  bool have = false;
  detail::for_each_image(g, [&](const std::vector<std::uint32_t>& rows) {
    if (!have || rows < best) {
      best = rows;
      have = true;
    }
  });
  const std::size_t nt = std::min(g.n_top(), g.n_bot());
  const std::size_t nb = std::max(g.n_top(), g.n_bot());
  CanonicalForm cf;
  cf.bytes.push_back(static_cast<std::uint8_t>(nt));
  cf.bytes.push_back(static_cast<std::uint8_t>(nb));
  for (auto code : best) {
    cf.bytes.push_back(static_cast<std::uint8_t>(code >> 8));
    cf.bytes.push_back(static_cast<std::uint8_t>(code));
  }
  return cf;
}

/// Hex digest of the canonical form; graphs beyond the canonical ceiling get
/// a "raw-" digest of their rows instead.
inline std::string canonical_id(const Graph& g) {
  if (g.n_top() > kCanonicalCeiling || g.n_bot() > kCanonicalCeiling) {
    std::vector<std::uint8_t> raw;
    for (const auto& row : g.rows()) {
      raw.insert(raw.end(), row.begin(), row.end());
      raw.push_back('/');
    }
    return "raw-" + detail::hex64(detail::fnv1a(raw));
  }
  return detail::hex64(detail::fnv1a(canonical_form(g).bytes));
}

/// Order of the symmetry group acting on colourings of K_{n_top,n_bot}.
inline std::uint64_t group_order(std::size_t n_top, std::size_t n_bot) {
  std::uint64_t f = 6;
  for (std::size_t i = 2; i <= n_top; ++i) f *= i;
  for (std::size_t i = 2; i <= n_bot; ++i) f *= i;
  return n_top == n_bot ? 2 * f : f;
}

/// Size of the orbit of g: group order divided by the stabilizer order.
inline std::uint64_t orbit_size(const Graph& g) {
  std::vector<std::uint32_t> own;
  detail::transformed_rows(g, detail::kColourPerms[0],
                           [&] {
                             std::vector<std::size_t> id(g.n_bot());
                             std::iota(id.begin(), id.end(), std::size_t{0});
                             return id;
                           }(),
                           own);
  std::uint64_t row_perms = 1;
  for (std::size_t i = 0; i < own.size();) {
    std::size_t j = i;
    while (j < own.size() && own[j] == own[i]) ++j;
    for (std::size_t k = 2; k <= j - i; ++k) row_perms *= k;
    i = j;
  }
  // Only orientations that keep the top side fixed can match g's rows; for a
  // balanced graph the transpose is a genuine group element.
  std::uint64_t matches = 0;
  const std::vector<Graph> hs =
      g.is_balanced() ? std::vector<Graph>{g, g.transposed()} : std::vector<Graph>{g};
  std::vector<std::uint32_t> rows;
  for (const Graph& h : hs) {
    std::vector<std::size_t> sigma(h.n_bot());
    for (const auto& tau : detail::kColourPerms) {
      std::iota(sigma.begin(), sigma.end(), std::size_t{0});
      do {
        detail::transformed_rows(h, tau, sigma, rows);
        matches += rows == own ? 1 : 0;
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
  return group_order(g.n_top(), g.n_bot()) / (matches * row_perms);
}

inline constexpr std::size_t kEnumerationCeiling = 4;

namespace detail {

inline Graph graph_from_codes(std::size_t n, const std::vector<std::uint32_t>& codes) {
  return Graph(n, n, [&](std::size_t t, std::size_t b) {
    return std::optional(colour_at(codes[t] >> (2 * (n - 1 - b)) & 3u));
  });
}

}  // namespace detail

/// Visits every complete 3-colouring of K_{n,n} as visit(g, multiplicity).
/// Raw mode visits all 3^(n²) colourings with multiplicity 1; reduced mode
/// visits one canonical representative per orbit with its orbit size.
template <typename Visit>
std::uint64_t enumerate_colourings(std::size_t n, bool reduce, Visit&& visit) {
  if (n > kEnumerationCeiling)
    throw ResourceLimit("enumeration limited to n <= " +
                        std::to_string(kEnumerationCeiling));
  std::uint64_t count = 0;
  const std::size_t cells = n * n;
  if (!reduce) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= 3;
    std::vector<std::uint8_t> digit(cells, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Graph g(n, n, [&](std::size_t t, std::size_t b) {
        return std::optional(colour_at(digit[t * n + b]));
      });
      visit(static_cast<const Graph&>(g), std::uint64_t{1});
      ++count;
      for (auto it = digit.rbegin(); it != digit.rend(); ++it) {
        if (++*it < 3) break;
        *it = 0;
      }
    }
    return count;
  }

  // Rows as base-4 codes over colour values 0..2; a multiset of n rows is
  // visited as a non-decreasing code sequence.
  std::vector<std::uint32_t> row_codes;
  {
    std::uint32_t lim = 1;
    for (std::size_t i = 0; i < n; ++i) lim *= 4;
    for (std::uint32_t code = 0; code < lim; ++code) {
      bool ok = true;
      for (std::size_t j = 0; j < n; ++j) ok = ok && ((code >> (2 * j)) & 3u) != 3u;
      if (ok) row_codes.push_back(code);
    }
  }
  if (n == 0) {
    Graph g(0, 0);
    visit(static_cast<const Graph&>(g), std::uint64_t{1});
    return 1;
  }
  std::vector<std::size_t> pick(n, 0);
  std::vector<std::uint32_t> codes(n), image;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) codes[i] = row_codes[pick[i]];
    const Graph g = detail::graph_from_codes(n, codes);
    bool minimal = true;
    detail::for_each_image(g, [&](const std::vector<std::uint32_t>& rows) {
      if (minimal && rows < codes) minimal = false;
    });
    if (minimal) {
      visit(g, orbit_size(g));
      ++count;
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] + 1 == row_codes.size()) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[i - 1];
  }
  return count;
}

/// Visits every complete colouring of K_{n,n} in colours c1 and c2.
template <typename Visit>
std::uint64_t enumerate_two_colourings(std::size_t n, Colour c1, Colour c2,
                                       Visit&& visit) {
  if (n > kEnumerationCeiling)
    throw ResourceLimit("enumeration limited to n <= " +
                        std::to_string(kEnumerationCeiling));
  const std::size_t cells = n * n;
  const std::uint64_t total = std::uint64_t{1} << cells;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Graph g(n, n, [&](std::size_t t, std::size_t b) {
      return std::optional(mask >> (t * n + b) & 1 ? c2 : c1);
    });
    visit(g);
  }
  return total;
}

}  // namespace monopart

#endif  // MONOPART_CANONICAL_HPP
