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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "monopart.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

namespace mp = monopart;
namespace ts = testing_support;
using mp::Colour;
using mp::Graph;

namespace {

// Degenerate cycles allowed: one vertex, one edge, or an alternating closed
// walk with distinct vertices.
::testing::AssertionResult valid_partition(const Graph& g, const mp::CyclePartition& part) {
  std::vector<int> hit(g.n_top() + g.n_bot(), 0);
  auto has = [&](const mp::Vertex& u, const mp::Vertex& v, Colour c) {
    if (u.side == v.side) return false;
    const auto t = u.side == mp::Side::Top ? u.index : v.index;
    const auto b = u.side == mp::Side::Top ? v.index : u.index;
    return g.has_edge(t, b, c);
  };
  for (const auto& cyc : part.cycles) {
    const auto& vs = cyc.vertices;
    if (vs.empty()) return ::testing::AssertionFailure() << "empty cycle";
    for (const auto& v : vs) ++hit[v.side == mp::Side::Top ? v.index : g.n_top() + v.index];
    if (vs.size() == 1) continue;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
      if (!has(vs[i], vs[i + 1], cyc.colour)) return ::testing::AssertionFailure() << "missing edge";
    if (vs.size() > 2 && !has(vs.back(), vs.front(), cyc.colour))
      return ::testing::AssertionFailure() << "not closed";
    if (vs.size() == 3) return ::testing::AssertionFailure() << "odd cycle";
  }
  for (int h : hit)
    if (h != 1) return ::testing::AssertionFailure() << "not a partition";
  return ::testing::AssertionSuccess();
}

Graph transform(const Graph& g, std::mt19937_64& rng) {
  Graph h = ts::permute_vertices(g, ts::random_order(rng, g.n_top()),
                                 ts::random_order(rng, g.n_bot()))
                .recoloured(ts::random_perm(rng));
  return rng() % 2 ? h.transposed() : h;
}

std::uint64_t pow3(std::size_t k) {
  std::uint64_t x = 1;
  while (k--) x *= 3;
  return x;
}

}  // namespace

TEST(MatchingOracleTest, Examples) {
  const auto red = mp::min_matching_cover_exact(ts::all_one(3, Colour::Red), 5);
  ASSERT_TRUE(red);
  EXPECT_EQ(red->first, 1);
  EXPECT_EQ(red->second.matchings[0].size(), 3u);

  const auto k22 = mp::min_matching_cover_exact(ts::proper_k22(), 5);
  ASSERT_TRUE(k22);
  EXPECT_EQ(k22->first, 2);
  for (const auto& m : k22->second.matchings) EXPECT_EQ(m.colour, Colour::Red);
  EXPECT_FALSE(mp::min_matching_cover_exact(ts::proper_k22(), 1));

  const auto blow = mp::min_matching_cover_exact(mp::blowup_lower_bound(2), 5);
  ASSERT_TRUE(blow);
  EXPECT_LE(blow->first, 5);
  RecordProperty("blowup2_min_matchings", blow->first);

  EXPECT_THROW(mp::min_matching_cover_exact(ts::proper_k22(), 0), mp::InvalidInput);
  EXPECT_THROW(mp::min_matching_cover_exact(Graph::from_rows({"R.", "RR"}), 5), mp::InvalidInput);
  EXPECT_THROW(mp::min_matching_cover_exact(ts::all_one(13, Colour::Red), 5), mp::ResourceLimit);
}

TEST(MatchingOracleTest, AgreesWithPerfectMatchingBruteForce) {
  for (std::size_t n = 1; n <= 2; ++n)
    mp::enumerate_colourings(n, false, [](const Graph& g, std::uint64_t) {
      const auto res = mp::min_matching_cover_exact(g, 5);
      ASSERT_TRUE(res);
      ASSERT_EQ(res->first, ref::min_cover_bruteforce(g));
      ASSERT_TRUE(ts::good_partition(g, res->second, static_cast<std::size_t>(res->first)));
    });
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 3 + rng() % 4;
    const Graph g = ref::random_graph(rng, n, n, 2 + rng() % 2);
    const auto res = mp::min_matching_cover_exact(g, 12);
    ASSERT_TRUE(res);
    ASSERT_EQ(res->first, ref::min_cover_bruteforce(g)) << iter;
    ASSERT_TRUE(ts::good_partition(g, res->second, static_cast<std::size_t>(res->first)));
  }
}

TEST(MatchingOracleTest, FiveAlwaysSufficeUpToThree) {
  mp::enumerate_colourings(3, false, [](const Graph& g, std::uint64_t) {
    ASSERT_TRUE(mp::min_matching_cover_exact(g, 5));
  });
}

TEST(MatchingOracleTest, InvariantUnderSymmetries) {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng() % 6;
    const Graph g = ref::random_graph(rng, n, n);
    const Graph h = transform(g, rng);
    EXPECT_EQ(mp::min_matching_cover_exact(g, 12)->first,
              mp::min_matching_cover_exact(h, 12)->first);
  }
}

TEST(CycleOracleTest, Examples) {
  const auto red = mp::min_cycle_partition_exact(ts::all_one(3, Colour::Red), 5);
  ASSERT_TRUE(red);
  EXPECT_EQ(red->first, 1);
  EXPECT_EQ(red->second.cycles[0].vertices.size(), 6u);

  const auto edge = mp::min_cycle_partition_exact(ts::all_one(1, Colour::Green), 5);
  ASSERT_TRUE(edge);
  EXPECT_EQ(edge->first, 1);

  const Graph b2 = mp::blowup_lower_bound(2);
  const auto blow = mp::min_cycle_partition_exact(b2, 5);
  ASSERT_TRUE(blow);
  EXPECT_EQ(blow->first, 3);
  EXPECT_TRUE(valid_partition(b2, blow->second));
  EXPECT_FALSE(mp::min_cycle_partition_exact(b2, 2));

  EXPECT_THROW(mp::min_cycle_partition_exact(b2, 0), mp::InvalidInput);
  EXPECT_THROW(mp::min_cycle_partition_exact(ts::all_one(10, Colour::Red), 5),
               mp::ResourceLimit);
}

TEST(CycleOracleTest, WitnessesAreValidAndUnbalancedInputsWork) {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t nt = 1 + rng() % 5, nb = 1 + rng() % 5;
    const Graph g = ref::random_graph(rng, nt, nb);
    const auto res = mp::min_cycle_partition_exact(g, 10);
    ASSERT_TRUE(res);
    ASSERT_EQ(static_cast<std::size_t>(res->first), res->second.cycles.size());
    ASSERT_TRUE(valid_partition(g, res->second));
    // a partition into matchings-of-one-edge bounds the answer
    ASSERT_LE(static_cast<std::size_t>(res->first), std::max(nt, nb));
  }
}

TEST(CycleOracleTest, MonotoneUnderAddedEdges) {
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t nt = 1 + rng() % 4, nb = 1 + rng() % 4;
    const Graph full = ref::random_graph(rng, nt, nb);
    const Graph sparse(nt, nb, [&](std::size_t t, std::size_t b) -> std::optional<Colour> {
      if (rng() % 3 == 0) return std::nullopt;
      return full.colour(t, b);
    });
    const auto a = mp::min_cycle_partition_exact(sparse, 10);
    const auto b = mp::min_cycle_partition_exact(full, 10);
    ASSERT_TRUE(a && b);
    ASSERT_LE(b->first, a->first);
    ASSERT_TRUE(valid_partition(sparse, a->second));
  }
}

TEST(CycleOracleTest, InvariantUnderSymmetries) {
  std::mt19937_64 rng(79);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t n = 1 + rng() % 5;
    const Graph g = ref::random_graph(rng, n, n);
    const Graph h = transform(g, rng);
    EXPECT_EQ(mp::min_cycle_partition_exact(g, 10)->first,
              mp::min_cycle_partition_exact(h, 10)->first);
  }
}

TEST(EpsHamiltonianTest, Examples) {
  EXPECT_TRUE(mp::is_eps_hamiltonian(ts::all_one(3, Colour::Red), 1.0 / 3.0));
  const Graph c6 = Graph::from_rows({"RR.", ".RR", "R.R"});
  ASSERT_TRUE(mp::is_hamiltonian(c6));
  EXPECT_FALSE(mp::is_eps_hamiltonian(c6, 1.0 / 3.0));
  EXPECT_TRUE(ref::eps_hamiltonian(ts::all_one(3, Colour::Red), 2));
  EXPECT_FALSE(ref::eps_hamiltonian(c6, 2));
  EXPECT_TRUE(mp::is_eps_hamiltonian(ts::all_one(1, Colour::Blue), 0.0));
  EXPECT_THROW(mp::is_eps_hamiltonian(Graph::from_rows({"RR"}), 0.1), mp::InvalidInput);
}

TEST(EpsHamiltonianTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(83);
  for (int iter = 0; iter < 600; ++iter) {
    const std::size_t n = 1 + rng() % 5;
    const Graph g = ref::random_graph(rng, n, n, 3, 0.1 + 0.3 * (iter % 3));
    ASSERT_EQ(mp::is_hamiltonian(g), ref::hamiltonian(g)) << iter;
    ASSERT_EQ(mp::is_eps_hamiltonian(g, 0.0), ref::hamiltonian(g)) << iter;
    const double eps = static_cast<double>(rng() % 60) / 100.0;
    const auto m = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil((1 - eps) * static_cast<double>(n) - 1e-9)));
    ASSERT_EQ(mp::is_eps_hamiltonian(g, eps), ref::eps_hamiltonian(g, m)) << iter;
  }
}

TEST(EnumerationTest, RawCounts) {
  EXPECT_EQ(mp::enumerate_colourings(1, false, [](const Graph&, std::uint64_t) {}), 3u);
  std::set<std::vector<std::string>> seen;
  EXPECT_EQ(mp::enumerate_colourings(2, false,
                                     [&](const Graph& g, std::uint64_t m) {
                                       EXPECT_EQ(m, 1u);
                                       seen.insert(g.rows());
                                     }),
            81u);
  EXPECT_EQ(seen.size(), 81u);
  EXPECT_EQ(mp::enumerate_two_colourings(2, Colour::Red, Colour::Blue, [](const Graph&) {}), 16u);
  EXPECT_THROW(mp::enumerate_colourings(5, true, [](const Graph&, std::uint64_t) {}),
               mp::ResourceLimit);
}

TEST(EnumerationTest, ReducedMatchesBurnside) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::uint64_t weight = 0;
    std::set<mp::CanonicalForm> forms;
    const auto reps = mp::enumerate_colourings(n, true, [&](const Graph& g, std::uint64_t m) {
      weight += m;
      EXPECT_EQ(m, mp::orbit_size(g));
      EXPECT_TRUE(forms.insert(mp::canonical_form(g)).second);
    });
    EXPECT_EQ(reps, ref::burnside_orbits(n)) << n;
    EXPECT_EQ(weight, pow3(n * n)) << n;
  }
}

TEST(CanonicalFormTest, ClassesMatchOrbits) {
  // distinct canonical forms over all raw colourings = orbit count
  for (std::size_t n = 1; n <= 2; ++n) {
    std::set<mp::CanonicalForm> forms;
    mp::enumerate_colourings(n, false, [&](const Graph& g, std::uint64_t) {
      forms.insert(mp::canonical_form(g));
    });
    EXPECT_EQ(forms.size(), ref::burnside_orbits(n));
  }
  std::mt19937_64 rng(89);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng() % 4;
    const Graph g = ref::random_graph(rng, n, n);
    EXPECT_EQ(mp::canonical_form(g), mp::canonical_form(transform(g, rng)));
    EXPECT_EQ(mp::canonical_id(g), mp::canonical_id(transform(g, rng)));
  }
  EXPECT_EQ(mp::group_order(2, 2), 48u);
  EXPECT_EQ(mp::group_order(3, 3), 432u);
}
