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

#pragma once

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "monopart.hpp"
#include "oracles.hpp"

namespace testing_support {

inline std::vector<ref::Pairs> to_pairs(const monopart::Cover& cov) {
  std::vector<ref::Pairs> out;
  for (const auto& m : cov.matchings) out.push_back({m.colour, m.pairs});
  return out;
}

// Valid partition into at most `limit` non-empty matchings, checked twice:
// by the library verifier and by the slow reference.
inline bool good_partition(const monopart::Graph& g, const monopart::Cover& cov,
                           std::size_t limit) {
  return cov.non_empty_count() <= limit && cov.is_partition() &&
         monopart::verify_cover(g, cov, true).ok() &&
         ref::valid_cover(g, to_pairs(cov), true);
}

inline monopart::Graph all_one(std::size_t n, monopart::Colour c) {
  return monopart::Graph::complete(n, n, c);
}

// Properly 2-coloured K_{2,2}: red on the diagonal, blue elsewhere.
inline monopart::Graph proper_k22() { return monopart::Graph::from_rows({"RB", "BR"}); }

inline std::array<monopart::Colour, 3> random_perm(std::mt19937_64& rng) {
  std::array<monopart::Colour, 3> p{monopart::Colour::Red, monopart::Colour::Green,
                                    monopart::Colour::Blue};
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Vertex relabelling: new top t is old top tp[t], likewise bottoms.
inline monopart::Graph permute_vertices(const monopart::Graph& g,
                                        const std::vector<std::size_t>& tp,
                                        const std::vector<std::size_t>& bp) {
  return monopart::Graph(g.n_top(), g.n_bot(), [&](std::size_t t, std::size_t b) {
    return g.colour(tp[t], bp[b]);
  });
}

inline std::vector<std::size_t> random_order(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace testing_support
