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

#include <cstdlib>
#include <sstream>

#include "monopart.hpp"

namespace mp = monopart;

TEST(ParallelMapTest, PreservesOrder) {
  std::vector<int> items(1000);
  for (int i = 0; i < 1000; ++i) items[static_cast<std::size_t>(i)] = i;
  for (std::size_t w : {1, 2, 3, 7}) {
    const auto out = mp::parallel_map(items, w, [](int x) { return x * x; });
    ASSERT_EQ(out.size(), items.size());
    for (std::size_t i = 0; i < out.size(); ++i) ASSERT_EQ(out[i], items[i] * items[i]);
  }
  EXPECT_TRUE(mp::parallel_map(std::vector<int>{}, 4, [](int x) { return x; }).empty());
}

TEST(WorkerCountTest, Precedence) {
  ::setenv("MONOPART_WORKERS", "3", 1);
  EXPECT_EQ(mp::worker_count(5), 5u);
  EXPECT_EQ(mp::worker_count(), 3u);
  ::setenv("MONOPART_WORKERS", "junk", 1);
  EXPECT_GE(mp::worker_count(), 1u);
  ::unsetenv("MONOPART_WORKERS");
  EXPECT_GE(mp::worker_count(), 1u);
}

TEST(EnumerateTest, CoverCheckSmall) {
  mp::EnumerateOptions opt;
  opt.n = 2;
  const auto s = mp::run_enumerate(opt);
  EXPECT_EQ(s.total, 81u);
  EXPECT_EQ(s.instances, 81u);
  EXPECT_EQ(s.failures, 0u);
  EXPECT_LE(s.max_matchings, 5);
  std::uint64_t hist = 0;
  for (const auto& [k, v] : s.histogram) hist += v;
  EXPECT_EQ(hist, 81u);
}

TEST(EnumerateTest, ReducedThreeByThree) {
  mp::EnumerateOptions opt;
  opt.n = 3;
  opt.reduce = true;
  const auto s = mp::run_enumerate(opt);
  EXPECT_EQ(s.total, 19683u);
  EXPECT_LT(s.instances, 19683u);
  EXPECT_EQ(s.failures, 0u);
}

TEST(EnumerateTest, TwoColourAndClassifyChecks) {
  mp::EnumerateOptions opt;
  opt.n = 4;
  opt.check = mp::EnumerateCheck::TwoColour3;
  const auto s = mp::run_enumerate(opt);
  EXPECT_EQ(s.total, 65536u);
  EXPECT_EQ(s.failures, 0u);
  EXPECT_LE(s.max_matchings, 3);

  opt.n = 3;
  opt.check = mp::EnumerateCheck::Classify;
  const auto c = mp::run_enumerate(opt);
  EXPECT_EQ(c.total, 512u);
  EXPECT_EQ(c.failures, 0u);
  EXPECT_FALSE(c.overlaps.empty());
}

TEST(EnumerateTest, ParallelEqualsSerial) {
  mp::EnumerateOptions opt;
  opt.n = 3;
  opt.batch = 500;
  opt.records = true;
  const auto serial = mp::run_enumerate(opt);
  opt.workers = 4;
  const auto parallel = mp::run_enumerate(opt);
  EXPECT_EQ(mp::summary_to_json(serial).dump(), mp::summary_to_json(parallel).dump());
  ASSERT_EQ(serial.records.size(), parallel.records.size());
  EXPECT_EQ(serial.records, parallel.records);
}

TEST(EnumerateTest, RecordsCarryMinimum) {
  mp::EnumerateOptions opt;
  opt.n = 2;
  opt.records = true;
  opt.record_minimum = true;
  const auto s = mp::run_enumerate(opt);
  ASSERT_EQ(s.records.size(), 81u);
  for (const auto& r : s.records) {
    ASSERT_TRUE(r.contains("canonical_id"));
    ASSERT_TRUE(r.contains("min_matchings"));
    EXPECT_GE(r["matchings_used"].get<int>(), r["min_matchings"].get<int>());
  }
}

TEST(EnumerateTest, CeilingIsAResourceLimit) {
  mp::EnumerateOptions opt;
  opt.n = 5;
  EXPECT_THROW(mp::run_enumerate(opt), mp::ResourceLimit);
}

TEST(ExperimentTest, CsvShapeAndDeterminism) {
  mp::ExperimentOptions opt;
  opt.n = 20;
  opt.eps = {0.0, 0.02};
  opt.seeds = 4;
  opt.timing = false;
  const auto recs = mp::run_experiment(opt);
  ASSERT_EQ(recs.size(), 8u);
  for (const auto& r : recs) {
    EXPECT_LE(r.matchings_used, 5u);
    EXPECT_GE(r.uncovered_top_frac, 0.0);
    EXPECT_LE(r.uncovered_top_frac, 1.0);
    if (r.eps == 0.0) {
      EXPECT_EQ(r.uncovered_top_frac, 0.0);
      EXPECT_EQ(r.uncovered_bot_frac, 0.0);
    }
  }
  const std::string csv = mp::experiment_csv(recs);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,eps,seed,matchings_used,uncovered_top_frac,uncovered_bot_frac,wall_time_ms");
  opt.workers = 3;
  EXPECT_EQ(mp::experiment_csv(mp::run_experiment(opt)), csv);

  opt.n = 9;
  EXPECT_THROW(mp::run_experiment(opt), mp::InvalidInput);
}

TEST(TraceJsonTest, OneObjectPerStage) {
  const auto res = mp::three_colour_cover(mp::blowup_lower_bound(3));
  const std::string lines = mp::trace_to_jsonl(res.trace);
  std::istringstream in(lines);
  std::string line;
  std::size_t k = 0;
  while (std::getline(in, line)) {
    const auto j = mp::Json::parse(line);
    EXPECT_TRUE(j.contains("stage"));
    EXPECT_TRUE(j.contains("branch"));
    ++k;
  }
  EXPECT_EQ(k, res.trace.stages.size());
}
