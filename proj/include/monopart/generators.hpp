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

#ifndef MONOPART_GENERATORS_HPP
#define MONOPART_GENERATORS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "monopart/errors.hpp"
#include "monopart/graph.hpp"

namespace monopart {

struct Seed {
  std::uint64_t value = 0;
};

using Weights = std::array<double, 3>;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform double in [0, 1) keyed on (seed, salt, t, b).
inline double edge_uniform(Seed seed, std::uint64_t salt, std::size_t t,
                           std::size_t b) {
  std::uint64_t h = splitmix64(seed.value ^ (salt * 0xD6E8FEB86659FD93ULL));
  h = splitmix64(h ^ static_cast<std::uint64_t>(t));
  h = splitmix64(h ^ (static_cast<std::uint64_t>(b) << 1 | 1));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline Weights normalized(const Weights& w) {
  for (double x : w)
    if (!(x >= 0.0)) throw InvalidInput("colour weights must be non-negative");
  const double total = w[0] + w[1] + w[2];
  if (!(total > 0.0)) throw InvalidInput("colour weights are all zero");
  return {w[0] / total, w[1] / total, w[2] / total};
}

inline Colour pick_colour(const Weights& p, double u) {
  if (u < p[0] || (p[1] == 0.0 && p[2] == 0.0)) return Colour::Red;
  if (u < p[0] + p[1] || p[2] == 0.0) return Colour::Green;
  return Colour::Blue;
}

}  // namespace detail

/// Blow-up of the properly r-edge-coloured K_{r,r} (colour (i+j) mod r):
/// every top vertex becomes r copies, bottom vertex 0 becomes r(r-1)+1 copies
/// and the other bottom vertices stay single. Balanced with r² per side.
inline Graph blowup_lower_bound(int r) {
  if (r < 1 || r > 3) throw InvalidInput("r must lie in [1, 3]");
  const std::size_t rr = static_cast<std::size_t>(r);
  const std::size_t big = rr * (rr - 1) + 1;
  auto base_bot = [&](std::size_t b) { return b < big ? 0 : b - big + 1; };
  return Graph(rr * rr, rr * rr, [&](std::size_t t, std::size_t b) {
    return std::optional(colour_at((t / rr + base_bot(b)) % rr));
  });
}

/// Blow-up of the properly 2-coloured K_{2,2}: top blocks a1, a2 and bottom
/// blocks b1, b2, red between blocks of equal index and blue otherwise.
inline Graph split_colouring(std::size_t a1, std::size_t a2, std::size_t b1,
                             std::size_t b2) {
  if (a1 == 0 || a2 == 0 || b1 == 0 || b2 == 0)
    throw InvalidInput("split blocks must be non-empty");
  return Graph(a1 + a2, b1 + b2, [&](std::size_t t, std::size_t b) {
    const bool same = (t < a1) == (b < b1);
    return std::optional(same ? Colour::Red : Colour::Blue);
  });
}

/// Sizes of the three top blocks (X, Y, Z) and six bottom blocks (A..F) of
/// the terminal configuration.
struct Figure4Spec {
  std::array<std::size_t, 3> top{};
  std::array<std::size_t, 6> bot{};

  std::size_t n_top() const { return std::accumulate(top.begin(), top.end(), std::size_t{0}); }
  std::size_t n_bot() const { return std::accumulate(bot.begin(), bot.end(), std::size_t{0}); }
  bool balanced() const { return n_top() == n_bot(); }

  friend bool operator==(const Figure4Spec&, const Figure4Spec&) = default;
};

/// Label of each bottom block, 0-based: kBlockLabel[k][c] is the top block
/// joined to block k in colour c. Blocks in order A, B, C, D, E, F.
inline constexpr std::array<std::array<std::size_t, 3>, 6> kBlockLabel{{
    {0, 2, 1},  // A = (1,3,2)
    {0, 1, 2},  // B = (1,2,3)
    {1, 2, 0},  // C = (2,3,1)
    {1, 0, 2},  // D = (2,1,3)
    {2, 1, 0},  // E = (3,2,1)
    {2, 0, 1},  // F = (3,1,2)
}};

inline constexpr std::array<char, 6> kBlockName{'A', 'B', 'C', 'D', 'E', 'F'};

/// Colour of the edges between top block `t` and bottom block `k`.
constexpr Colour figure4_colour(std::size_t t, std::size_t k) {
  for (std::size_t c = 0; c < 3; ++c)
    if (kBlockLabel[k][c] == t) return colour_at(c);
  return Colour::Red;
}

/// Start index of every block; tops laid out X, Y, Z and bottoms A..F.
inline std::array<std::size_t, 3> top_offsets(const Figure4Spec& s) {
  return {0, s.top[0], s.top[0] + s.top[1]};
}
inline std::array<std::size_t, 6> bot_offsets(const Figure4Spec& s) {
  std::array<std::size_t, 6> off{};
  for (std::size_t k = 1; k < 6; ++k) off[k] = off[k - 1] + s.bot[k - 1];
  return off;
}

inline std::size_t top_block_of(const Figure4Spec& s, std::size_t t) {
  std::size_t k = 0;
  while (k < 2 && t >= s.top[k]) t -= s.top[k++];
  return k;
}
inline std::size_t bot_block_of(const Figure4Spec& s, std::size_t b) {
  std::size_t k = 0;
  while (k < 5 && b >= s.bot[k]) b -= s.bot[k++];
  return k;
}

inline Graph figure4_family(const Figure4Spec& spec) {
  if (!spec.balanced())
    throw InvalidInput("figure-4 spec is unbalanced: " +
                       std::to_string(spec.n_top()) + " top vs " +
                       std::to_string(spec.n_bot()) + " bottom vertices");
  return Graph(spec.n_top(), spec.n_bot(), [&](std::size_t t, std::size_t b) {
    return std::optional(figure4_colour(top_block_of(spec, t), bot_block_of(spec, b)));
  });
}

/// Each edge gets colour c with probability weights[c] / sum(weights), drawn
/// from a hash of (seed, t, b).
inline Graph random_colouring(std::size_t n, const Weights& weights, Seed seed) {
  const Weights p = detail::normalized(weights);
  return Graph(n, n, [&](std::size_t t, std::size_t b) {
    return std::optional(detail::pick_colour(p, detail::edge_uniform(seed, 0, t, b)));
  });
}

/// random_colouring with every edge then deleted independently with
/// probability eps.
inline Graph random_dense(std::size_t n, double eps, const Weights& weights,
                          Seed seed) {
  if (!(eps >= 0.0 && eps < 1.0)) throw InvalidInput("eps must lie in [0, 1)");
  const Weights p = detail::normalized(weights);
  return Graph(n, n, [&](std::size_t t, std::size_t b) -> std::optional<Colour> {
    if (detail::edge_uniform(seed, 1, t, b) < eps) return std::nullopt;
    return detail::pick_colour(p, detail::edge_uniform(seed, 0, t, b));
  });
}

}  // namespace monopart

#endif  // MONOPART_GENERATORS_HPP
