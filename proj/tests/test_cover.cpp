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

#include <map>
#include <random>

#include "monopart.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

namespace mp = monopart;
namespace ts = testing_support;
using mp::Colour;
using mp::Graph;

namespace {

Graph two_coloured(std::size_t n, std::uint32_t code) {
  return Graph(n, n, [&](std::size_t t, std::size_t b) {
    return std::optional(code >> (t * n + b) & 1 ? Colour::Blue : Colour::Red);
  });
}

std::multiset<std::size_t> sizes(const mp::Cover& cov) {
  std::multiset<std::size_t> s;
  for (const auto& m : cov.matchings) s.insert(m.size());
  return s;
}

mp::Cover recoloured(const Graph& g, const mp::Cover& cov, const std::array<Colour, 3>& p) {
  std::vector<mp::ConnectedMatching> ms;
  for (const auto& m : cov.matchings) ms.push_back({p[mp::index_of(m.colour)], m.pairs, {}});
  return mp::make_cover(g, ms);
}

}  // namespace

TEST(TwoColourCoverTest, Examples) {
  const auto all_red = mp::two_colour_cover(ts::all_one(3, Colour::Red), Colour::Red, Colour::Blue);
  ASSERT_EQ(all_red.matchings.size(), 1u);
  EXPECT_EQ(all_red.matchings[0].colour, Colour::Red);
  EXPECT_EQ(all_red.matchings[0].size(), 3u);

  const auto split = mp::two_colour_cover(ts::proper_k22(), Colour::Red, Colour::Blue);
  ASSERT_EQ(split.matchings.size(), 2u);
  EXPECT_EQ(split.matchings[0].colour, Colour::Red);
  EXPECT_EQ(split.matchings[0].pairs, (mp::Matching{{0, 0}}));
  EXPECT_EQ(split.matchings[1].colour, Colour::Red);
  EXPECT_EQ(split.matchings[1].pairs, (mp::Matching{{1, 1}}));

  const Graph v = Graph::from_rows({"RR", "BB"});
  const auto vc = mp::two_colour_cover(v, Colour::Red, Colour::Blue);
  ASSERT_EQ(vc.matchings.size(), 2u);
  EXPECT_EQ(vc.matchings[0].colour, Colour::Red);
  EXPECT_EQ(vc.matchings[0].pairs, (mp::Matching{{0, 0}}));
  EXPECT_EQ(vc.matchings[1].colour, Colour::Blue);
  EXPECT_EQ(vc.matchings[1].pairs, (mp::Matching{{1, 1}}));
}

TEST(TwoColourCoverTest, RejectsBadInput) {
  EXPECT_THROW(mp::two_colour_cover(Graph::from_rows({"RB"}), Colour::Red, Colour::Blue),
               mp::InvalidInput);
  EXPECT_THROW(mp::two_colour_cover(Graph::from_rows({"R.", "BB"}), Colour::Red, Colour::Blue),
               mp::InvalidInput);
  EXPECT_THROW(mp::two_colour_cover(Graph::from_rows({"RG", "BB"}), Colour::Red, Colour::Blue),
               mp::InvalidInput);
}

TEST(TwoColourCoverTest, AtMostThreeAndTwoUnlessSplitExhaustive) {
  std::map<std::size_t, std::size_t> histogram;
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::uint32_t code = 0; code < (1u << (n * n)); ++code) {
      const Graph g = two_coloured(n, code);
      const bool split = mp::classify_two(g, Colour::Red, Colour::Blue).kind ==
                         mp::TwoColourClass::Kind::Split;
      for (bool swap : {false, true}) {
        const auto cov = mp::two_colour_cover(g, Colour::Red, Colour::Blue, swap);
        ASSERT_TRUE(ts::good_partition(g, cov, split ? 3 : 2)) << n << " " << code;
        ++histogram[cov.non_empty_count()];
      }
    }
  EXPECT_GT(histogram[3], 0u);
}

TEST(ThreeColourCoverTest, SingleEdge) {
  for (auto c : mp::kColours) {
    const auto res = mp::three_colour_cover(ts::all_one(1, c));
    ASSERT_EQ(res.cover.matchings.size(), 1u);
    EXPECT_EQ(res.cover.matchings[0].colour, c);
    EXPECT_EQ(res.cover.matchings[0].size(), 1u);
  }
}

TEST(ThreeColourCoverTest, BlowupMatchesOracleMinimum) {
  const Graph g = mp::blowup_lower_bound(3);
  const auto res = mp::three_colour_cover(g);
  ASSERT_TRUE(ts::good_partition(g, res.cover, 5));
  const auto best = mp::min_matching_cover_exact(g, 5);
  ASSERT_TRUE(best);
  EXPECT_EQ(static_cast<int>(res.cover.non_empty_count()), best->first);
}

TEST(ThreeColourCoverTest, FigureFourInstance) {
  const Graph g = mp::figure4_family({{2, 2, 2}, {1, 1, 1, 1, 1, 1}});
  const auto res = mp::three_colour_cover(g);
  ASSERT_TRUE(ts::good_partition(g, res.cover, 5));
  EXPECT_GE(static_cast<int>(res.cover.non_empty_count()), ref::min_cover_bruteforce(g));
}

TEST(ThreeColourCoverTest, ExhaustiveSmallAgainstBruteForceMinimum) {
  for (std::size_t n = 1; n <= 2; ++n)
    mp::enumerate_colourings(n, false, [&](const Graph& g, std::uint64_t) {
      for (auto mode : {mp::SolveMode::Auto, mp::SolveMode::ProofGuided, mp::SolveMode::Exact}) {
        const auto res = mp::three_colour_cover(g, {mode, 10});
        ASSERT_TRUE(ts::good_partition(g, res.cover, 5));
        const int k = static_cast<int>(res.cover.non_empty_count());
        ASSERT_GE(k, ref::min_cover_bruteforce(g));
        if (mode == mp::SolveMode::Exact) ASSERT_EQ(k, ref::min_cover_bruteforce(g));
      }
    });
}

TEST(ThreeColourCoverTest, RandomInstancesUpToSeven) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng() % 7;
    const Graph g = ref::random_graph(rng, n, n, 1 + rng() % 3);
    const auto res = mp::three_colour_cover(g, {mp::SolveMode::ProofGuided, 10});
    ASSERT_TRUE(ts::good_partition(g, res.cover, 5)) << g.rows().size();
    if (n <= 6) ASSERT_GE(static_cast<int>(res.cover.non_empty_count()),
                          ref::min_cover_bruteforce(g));
  }
}

TEST(ThreeColourCoverTest, ColourPermutationEquivariance) {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng() % 6;
    const Graph g = ref::random_graph(rng, n, n);
    const auto p = ts::random_perm(rng);
    const Graph h = g.recoloured(p);
    const auto a = mp::three_colour_cover(g, {mp::SolveMode::ProofGuided, 10});
    const auto b = mp::three_colour_cover(h, {mp::SolveMode::ProofGuided, 10});
    ASSERT_EQ(sizes(a.cover), sizes(b.cover));
    EXPECT_EQ(recoloured(h, a.cover, p), b.cover);
  }
}

TEST(ThreeColourCoverTest, TraceAndErrors) {
  const Graph g = mp::blowup_lower_bound(3);
  const auto res = mp::three_colour_cover(g);
  ASSERT_FALSE(res.trace.stages.empty());
  for (const auto& st : res.trace.stages) {
    const std::string name = mp::stage_name(st.stage);
    EXPECT_TRUE(name == "Claim1Branch" || name == "Claim2Branch" || name == "SplitResidue" ||
                name == "Figure4Terminal" || name == "ExactFallback")
        << name;
  }
  // the accepted stage's matchings are the cover
  EXPECT_EQ(mp::make_cover(g, res.trace.last()->matchings), res.cover);

  EXPECT_THROW(mp::three_colour_cover(Graph::from_rows({"R.", "RR"})), mp::InvalidInput);
  EXPECT_THROW(mp::three_colour_cover(Graph::from_rows({"RR"})), mp::InvalidInput);
  EXPECT_EQ(mp::three_colour_cover(Graph(0, 0)).cover.matchings.size(), 0u);
  EXPECT_EQ(mp::three_colour_cover(g), res);  // deterministic
}

TEST(Figure4CoverTest, Examples) {
  for (const mp::Figure4Spec& spec :
       {mp::Figure4Spec{{2, 2, 2}, {1, 1, 1, 1, 1, 1}},
        mp::Figure4Spec{{1, 1, 1}, {1, 1, 1, 0, 0, 0}}}) {
    const Graph g = mp::figure4_family(spec);
    const auto cov = mp::figure4_cover(spec, g);
    ASSERT_TRUE(ts::good_partition(g, cov, 5));
    EXPECT_GE(static_cast<int>(cov.non_empty_count()), ref::min_cover_bruteforce(g));
  }

  // Y = 1 <= C + D = 2, so index 2 is weak for red.
  const mp::Figure4Spec spec{{3, 1, 2}, {2, 1, 1, 1, 1, 0}};
  const auto weak = mp::weak_indices(spec);
  EXPECT_TRUE(weak.weak[0][1]);
  mp::SolveTrace trace;
  const Graph g = mp::figure4_family(spec);
  ASSERT_TRUE(ts::good_partition(g, mp::figure4_cover(spec, g, &trace), 5));
  ASSERT_GE(trace.stages.size(), 2u);
  EXPECT_EQ(trace.stages[0].stage, mp::Stage::Figure4Terminal);
  const std::string& br = trace.stages[0].branch;  // "weak R:<indices> G:... B:..."
  const auto r = br.find("R:");
  ASSERT_NE(r, std::string::npos) << br;
  EXPECT_NE(br.substr(r, br.find(' ', r) - r).find('2'), std::string::npos) << br;

  EXPECT_THROW(mp::figure4_cover(spec, ts::all_one(6, Colour::Red)), mp::InvalidInput);
}

TEST(Figure4CoverTest, WeakIndexExistsForEveryColour) {
  // pigeonhole: sum over i of |top C_i| = sum of |bottom C_i|
  std::mt19937_64 rng(47);
  for (int iter = 0; iter < 2000; ++iter) {
    mp::Figure4Spec s{};
    std::size_t n = 0;
    for (auto& x : s.top) n += (x = rng() % 5);
    for (std::size_t i = 0; i < n; ++i) ++s.bot[rng() % 6];
    const auto w = mp::weak_indices(s);
    for (auto c : mp::kColours) ASSERT_TRUE(w.any_weak(c));
  }
}

TEST(Figure4CoverTest, ExhaustiveUpToSideFive) {
  std::size_t specs = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t x = 0; x <= n; ++x)
      for (std::size_t y = 0; x + y <= n; ++y) {
        const std::size_t z = n - x - y;
        // compositions of n into six parts
        std::array<std::size_t, 6> b{};
        std::function<void(std::size_t, std::size_t)> go = [&](std::size_t k, std::size_t left) {
          if (k == 5) {
            b[5] = left;
            const mp::Figure4Spec s{{x, y, z}, b};
            const Graph g = mp::figure4_family(s);
            ASSERT_TRUE(ts::good_partition(g, mp::figure4_cover(s, g), 5));
            ++specs;
            return;
          }
          for (std::size_t v = 0; v <= left; ++v) {
            b[k] = v;
            go(k + 1, left - v);
          }
        };
        go(0, n);
      }
  EXPECT_GT(specs, 1000u);
}

TEST(DenseCoverTest, RedMinusOneEdge) {
  const Graph g(10, 10, [](std::size_t t, std::size_t b) {
    return t == 4 && b == 7 ? std::nullopt : std::optional(Colour::Red);
  });
  const auto res = mp::dense_cover(g, mp::DenseParams::from_eps(0.01));
  ASSERT_EQ(res.cover.matchings.size(), 1u);
  EXPECT_EQ(res.cover.matchings[0].size(), 10u);
  EXPECT_TRUE(res.cover.is_partition());
}

TEST(DenseCoverTest, CompleteInputMatchesExactSolver) {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 1 + rng() % 8;
    const Graph g = ref::random_graph(rng, n, n);
    const auto d = mp::dense_cover(g, mp::DenseParams::from_eps(1e-6));
    const auto e = mp::three_colour_cover(g);
    EXPECT_EQ(d.cover, e.cover);
    EXPECT_EQ(d.uncovered_top_frac, 0.0);
    EXPECT_EQ(d.uncovered_bot_frac, 0.0);
  }
}

TEST(DenseCoverTest, RandomDenseInstancesAreValid) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 20 + seed % 30;
    const double eps = seed % 2 ? 0.01 : 0.05;
    const Graph g = mp::random_dense(n, eps, {1, 1, 1}, mp::Seed{seed});
    const double used = std::max(eps, 1 - mp::density(g));
    const auto res = mp::dense_cover(g, mp::DenseParams::from_eps(used));
    ASSERT_LE(res.cover.non_empty_count(), 5u);
    ASSERT_TRUE(mp::verify_cover(g, res.cover, false).ok());
    ASSERT_TRUE(ref::valid_cover(g, ts::to_pairs(res.cover), false));
    EXPECT_GE(res.uncovered_top_frac, 0.0);
    EXPECT_LE(res.uncovered_top_frac, 1.0);
  }
}

TEST(DenseCoverTest, ThinnedStructuredInstances) {
  // uniform colourings almost always have a monochromatic perfect matching,
  // so the structured families are what reach the multi-matching branches
  const Graph b3 = mp::blowup_lower_bound(3);
  const std::vector<Graph> bases{
      mp::figure4_family({{20, 20, 20}, {10, 10, 10, 10, 10, 10}}),
      Graph(63, 63, [&](std::size_t t, std::size_t b) { return b3.colour(t / 7, b / 7); }),
      mp::split_colouring(30, 30, 20, 40)};
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(0, 1);
  for (const auto& base : bases)
    for (double eps : {0.005, 0.01, 0.02})
      for (int rep = 0; rep < 5; ++rep) {
        const Graph g(base.n_top(), base.n_bot(),
                      [&](std::size_t t, std::size_t b) -> std::optional<Colour> {
                        if (u(rng) < eps) return std::nullopt;
                        return base.colour(t, b);
                      });
        const auto res = mp::dense_cover(
            g, mp::DenseParams::from_eps(std::max(eps, 1 - mp::density(g))));
        ASSERT_LE(res.cover.non_empty_count(), 5u);
        ASSERT_TRUE(mp::verify_cover(g, res.cover, false).ok());
        ASSERT_TRUE(ref::valid_cover(g, ts::to_pairs(res.cover), false));
        EXPECT_TRUE(res.within_rho);
      }
}

TEST(DenseCoverTest, LargeNearlyCompleteInstance) {
  const Graph g = mp::random_dense(100, 0.001, {1, 1, 1}, mp::Seed{7});
  const auto p = mp::DenseParams::from_eps(std::max(0.001, 1 - mp::density(g)));
  const auto res = mp::dense_cover(g, p);
  ASSERT_TRUE(mp::verify_cover(g, res.cover, false).ok());
  EXPECT_LE(res.uncovered_top_frac, p.rho);
  EXPECT_LE(res.uncovered_bot_frac, p.rho);
  RecordProperty("uncovered_top_frac", std::to_string(res.uncovered_top_frac));
}

TEST(DenseCoverTest, Preconditions) {
  EXPECT_THROW(mp::dense_cover(Graph::from_rows({"R.", ".R"}), mp::DenseParams::from_eps(0.1)),
               mp::PreconditionFailed);
  EXPECT_THROW(mp::dense_cover(Graph::from_rows({"RR"}), mp::DenseParams::from_eps(0.1)),
               mp::PreconditionFailed);
}
