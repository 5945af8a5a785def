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

#ifndef MONOPART_HARNESS_HPP
#define MONOPART_HARNESS_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "monopart/canonical.hpp"
#include "monopart/dense.hpp"
#include "monopart/errors.hpp"
#include "monopart/generators.hpp"
#include "monopart/graph.hpp"
#include "monopart/json_io.hpp"
#include "monopart/oracle.hpp"
#include "monopart/solver.hpp"
#include "monopart/structure.hpp"
#include "monopart/two_colour.hpp"

namespace monopart {

/// Pool size: explicit request, else MONOPART_WORKERS, else the hardware
/// thread count.
inline std::size_t worker_count(std::optional<std::size_t> requested = std::nullopt) {
  if (requested && *requested > 0) return *requested;
  if (const char* env = std::getenv("MONOPART_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Applies f to every item on `workers` threads (contiguous chunks) and
/// returns the results in input order.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, std::size_t workers, F&& f)
    -> std::vector<decltype(f(items[0]))> {
  using R = decltype(f(items[0]));
  std::vector<std::optional<R>> slots(items.size());
  workers = std::max<std::size_t>(1, std::min(workers, items.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) slots[i] = f(items[i]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (items.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(items.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) slots[i] = f(items[i]);
      });
    for (auto& t : pool) t.join();
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

enum class EnumerateCheck { Cover5, TwoColour3, Classify };

inline std::optional<EnumerateCheck> parse_check(const std::string& s) {
  if (s == "cover5") return EnumerateCheck::Cover5;
  if (s == "two_colour3") return EnumerateCheck::TwoColour3;
  if (s == "classify") return EnumerateCheck::Classify;
  return std::nullopt;
}

inline const char* check_name(EnumerateCheck c) {
  switch (c) {
    case EnumerateCheck::Cover5: return "cover5";
    case EnumerateCheck::TwoColour3: return "two_colour3";
    case EnumerateCheck::Classify: return "classify";
  }
  return "?";
}

struct EnumerateOptions {
  std::size_t n = 1;
  bool reduce = false;
  EnumerateCheck check = EnumerateCheck::Cover5;
  std::size_t workers = 1;
  bool records = false;        // collect per-instance records
  bool record_minimum = false; // include the oracle minimum in records
  std::size_t batch = 4096;
};

/// Counts are weighted by orbit size in reduced mode, so `total` is always
/// the number of colourings covered.
struct EnumerateSummary {
  std::size_t n = 0;
  bool reduced = false;
  EnumerateCheck check = EnumerateCheck::Cover5;
  std::uint64_t total = 0;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  int max_matchings = 0;
  std::map<int, std::uint64_t> histogram;            // matchings used -> count
  std::map<std::string, std::uint64_t> stages;       // finishing stage -> count
  std::map<std::string, std::uint64_t> overlaps;     // classify: cases that hold
  std::vector<std::string> failure_examples;         // rows of failing inputs
  std::vector<Json> records;
};

struct InstanceOutcome {
  bool ok = true;
  int matchings = 0;
  std::string stage;
  std::string overlap;
  std::optional<int> minimum;
};

inline InstanceOutcome check_instance(const Graph& g, const EnumerateOptions& opt) {
  InstanceOutcome out;
  try {
    switch (opt.check) {
      case EnumerateCheck::Cover5: {
        const auto res = three_colour_cover(g);
        out.matchings = static_cast<int>(res.cover.non_empty_count());
        out.ok = out.matchings <= 5 && verify_cover(g, res.cover, true).ok();
        out.stage = res.trace.last() ? stage_name(res.trace.last()->stage) : "Empty";
        if (opt.record_minimum) {
          const auto m = min_matching_cover_exact(g, 5);
          out.minimum = m ? std::optional<int>(m->first) : std::nullopt;
          out.ok = out.ok && m && m->first <= out.matchings;
        }
        break;
      }
      case EnumerateCheck::TwoColour3: {
        const auto cov = two_colour_cover(g, Colour::Red, Colour::Blue);
        const auto cls = classify_two(g, Colour::Red, Colour::Blue);
        out.matchings = static_cast<int>(cov.non_empty_count());
        const int cap = cls.kind == TwoColourClass::Kind::Split ? 3 : 2;
        out.ok = out.matchings <= cap && verify_cover(g, cov, true).ok();
        out.stage = kind_name(cls.kind);
        break;
      }
      case EnumerateCheck::Classify: {
        const auto cls = classify_two(g, Colour::Red, Colour::Blue);
        const auto cases = two_colour_cases(g, Colour::Red, Colour::Blue);
        out.ok = witness_holds(g, cls);
        out.stage = kind_name(cls.kind);
        out.overlap = std::string(cases.spanning ? "S" : "") +
                      (cases.v_colouring ? "V" : "") + (cases.split ? "P" : "");
        break;
      }
    }
  } catch (const Error&) {
    out.ok = false;
  }
  return out;
}

/// Runs the selected check over every colouring of K_{n,n} (2-colourings in
/// red and blue for the two-colour checks, where reduction does not apply).
inline EnumerateSummary run_enumerate(const EnumerateOptions& opt) {
  if (opt.n > kEnumerationCeiling)
    throw ResourceLimit("enumeration limited to n <= " + std::to_string(kEnumerationCeiling));
  EnumerateSummary sum;
  sum.n = opt.n;
  sum.check = opt.check;
  const bool three = opt.check == EnumerateCheck::Cover5;
  sum.reduced = three && opt.reduce;

  std::vector<std::pair<Graph, std::uint64_t>> batch;
  auto flush = [&] {
    auto outcomes = parallel_map(batch, opt.workers,
                                 [&](const std::pair<Graph, std::uint64_t>& item) {
                                   return check_instance(item.first, opt);
                                 });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const auto& o = outcomes[i];
      const std::uint64_t w = batch[i].second;
      sum.total += w;
      ++sum.instances;
      if (!o.ok) {
        sum.failures += w;
        if (sum.failure_examples.size() < 10) {
          std::string rows;
          for (const auto& r : batch[i].first.rows()) rows += (rows.empty() ? "" : "/") + r;
          sum.failure_examples.push_back(rows);
        }
      }
      sum.max_matchings = std::max(sum.max_matchings, o.matchings);
      if (opt.check != EnumerateCheck::Classify) sum.histogram[o.matchings] += w;
      if (!o.stage.empty()) sum.stages[o.stage] += w;
      if (!o.overlap.empty()) sum.overlaps[o.overlap] += w;
      if (opt.records) {
        Json rec{{"canonical_id", canonical_id(batch[i].first)},
                 {"n", opt.n},
                 {"matchings_used", o.matchings}};
        if (o.minimum) rec["min_matchings"] = *o.minimum;
        sum.records.push_back(std::move(rec));
      }
    }
    batch.clear();
  };
  auto push = [&](const Graph& g, std::uint64_t w) {
    batch.emplace_back(g, w);
    if (batch.size() >= opt.batch) flush();
  };
  if (three)
    enumerate_colourings(opt.n, opt.reduce, push);
  else
    enumerate_two_colourings(opt.n, Colour::Red, Colour::Blue,
                             [&](const Graph& g) { push(g, 1); });
  flush();
  return sum;
}

inline Json summary_to_json(const EnumerateSummary& s) {
  Json hist = Json::object();
  for (const auto& [k, v] : s.histogram) hist[std::to_string(k)] = v;
  Json j{{"n", s.n},
         {"check", check_name(s.check)},
         {"reduced", s.reduced},
         {"total", s.total},
         {"instances", s.instances},
         {"failures", s.failures},
         {"max_matchings", s.max_matchings},
         {"histogram", hist},
         {"stages", s.stages}};
  if (!s.overlaps.empty()) j["overlaps"] = s.overlaps;
  if (!s.failure_examples.empty()) j["failure_examples"] = s.failure_examples;
  return j;
}

// ---------------------------------------------------------------------------
// Dense experiment

struct ExperimentRecord {
  std::size_t n = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  std::size_t matchings_used = 0;
  double uncovered_top_frac = 0.0;
  double uncovered_bot_frac = 0.0;
  double wall_time_ms = 0.0;
};

struct ExperimentOptions {
  std::size_t n = 60;
  std::vector<double> eps{0.01};
  std::size_t seeds = 10;
  std::uint64_t seed_base = 1;
  Weights weights{1.0, 1.0, 1.0};
  bool timing = true;  // false writes wall_time_ms = 0 for byte-stable output
  std::size_t workers = 1;
};

/// One record per (eps, seed) in eps-major order; instances are generated by
/// random_dense and solved by dense_cover with the default parameter schedule.
inline std::vector<ExperimentRecord> run_experiment(const ExperimentOptions& opt) {
  if (opt.n < 10) throw InvalidInput("experiment needs n >= 10");
  struct Job {
    double eps;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (double e : opt.eps)
    for (std::size_t i = 0; i < opt.seeds; ++i) jobs.push_back({e, opt.seed_base + i});
  return parallel_map(jobs, opt.workers, [&](const Job& job) {
    const auto start = std::chrono::steady_clock::now();
    const Graph g = random_dense(opt.n, job.eps, opt.weights, Seed{job.seed});
    const DenseParams p = DenseParams::from_eps(job.eps);
    // The realized density can dip below 1-eps; the generator promises 1-2eps.
    DenseParams run = p;
    run.eps = std::max(job.eps, 1.0 - density(g));
    const auto res = dense_cover(g, run);
    const auto stop = std::chrono::steady_clock::now();
    ExperimentRecord rec;
    rec.n = opt.n;
    rec.eps = job.eps;
    rec.seed = job.seed;
    rec.matchings_used = res.cover.non_empty_count();
    rec.uncovered_top_frac = res.uncovered_top_frac;
    rec.uncovered_bot_frac = res.uncovered_bot_frac;
    rec.wall_time_ms =
        opt.timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;
    return rec;
  });
}

inline std::string experiment_csv(const std::vector<ExperimentRecord>& recs) {
  std::string out = "n,eps,seed,matchings_used,uncovered_top_frac,uncovered_bot_frac,wall_time_ms\n";
  char line[256];
  for (const auto& r : recs) {
    std::snprintf(line, sizeof line, "%zu,%.6g,%llu,%zu,%.6f,%.6f,%.3f\n", r.n, r.eps,
                  static_cast<unsigned long long>(r.seed), r.matchings_used,
                  r.uncovered_top_frac, r.uncovered_bot_frac, r.wall_time_ms);
    out += line;
  }
  return out;
}

}  // namespace monopart

#endif  // MONOPART_HARNESS_HPP
