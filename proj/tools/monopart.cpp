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

// Command-line front end: gen, solve, verify, classify, oracle, enumerate,
// experiment. Exit codes: 0 success, 1 check failed, 2 invalid input,
// 3 incomplete pipeline, 4 resource limit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monopart.hpp"

namespace mp = monopart;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInvalid = 2, kIncomplete = 3, kResource = 4 };

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw mp::InvalidInput("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw mp::InvalidInput("cannot write " + path);
  out << text;
}

mp::Json parse_json(const std::string& text) {
  try {
    return mp::Json::parse(text);
  } catch (const mp::Json::parse_error& e) {
    throw mp::InvalidInput(std::string("JSON parse error: ") + e.what());
  }
}

template <std::size_t N>
std::array<double, N> parse_list(const std::string& text) {
  std::array<double, N> out{};
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i == N) throw mp::InvalidInput("too many values in '" + text + "'");
    try {
      out[i++] = std::stod(item);
    } catch (const std::exception&) {
      throw mp::InvalidInput("not a number: '" + item + "'");
    }
  }
  if (i != N) throw mp::InvalidInput("expected " + std::to_string(N) + " values in '" + text + "'");
  return out;
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw mp::InvalidInput("not a number: '" + item + "'");
    }
  }
  return out;
}

mp::Colour parse_colour(char ch) {
  const auto c = mp::colour_from_char(ch);
  if (!c) throw mp::InvalidInput(std::string("invalid colour '") + ch + "'");
  return *c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monopart: monochromatic connected matching covers of 3-coloured K_{n,n}"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph as JSON");
  std::string gen_kind, gen_out, gen_weights = "1,1,1", gen_spec;
  int gen_r = 2;
  std::size_t gen_n = 10, a1 = 1, a2 = 1, b1 = 1, b2 = 1;
  double gen_eps = 0.01;
  std::uint64_t gen_seed = 1;
  gen->add_option("kind", gen_kind, "blowup | split | figure4 | random | dense")->required();
  gen->add_option("--r", gen_r, "blow-up parameter r in [1,3]");
  gen->add_option("--n", gen_n, "side size for random graphs");
  gen->add_option("--a1", a1);
  gen->add_option("--a2", a2);
  gen->add_option("--b1", b1);
  gen->add_option("--b2", b2);
  gen->add_option("--spec", gen_spec, "figure-4 sizes X,Y,Z,A,B,C,D,E,F");
  gen->add_option("--weights", gen_weights, "colour weights wR,wG,wB");
  gen->add_option("--eps", gen_eps, "deletion probability for dense graphs");
  gen->add_option("--seed", gen_seed);
  gen->add_option("-o,--output", gen_out);

  // solve
  auto* solve = app.add_subcommand("solve", "cover a graph with at most five connected matchings");
  std::string solve_in = "-", solve_mode = "auto", solve_trace, solve_out;
  bool require_partition = false;
  std::optional<double> solve_eps;
  std::size_t exact_ceiling = 10;
  solve->add_option("input", solve_in, "graph JSON file, '-' for stdin");
  solve->add_option("--mode", solve_mode, "auto | proof | exact");
  solve->add_flag("--require-partition", require_partition);
  solve->add_option("--eps", solve_eps, "use the dense solver with this eps");
  solve->add_option("--exact-ceiling", exact_ceiling, "largest n for the exact fallback");
  solve->add_option("--trace", solve_trace, "write the stage trace as JSON lines");
  solve->add_option("-o,--output", solve_out);

  // verify
  auto* verify = app.add_subcommand("verify", "validate a cover against a graph");
  std::string verify_graph, verify_cover_path;
  bool verify_partition = false;
  verify->add_option("graph", verify_graph)->required();
  verify->add_option("cover", verify_cover_path)->required();
  verify->add_flag("--require-partition", verify_partition);

  // classify
  auto* classify = app.add_subcommand("classify", "classify a 2-coloured graph");
  std::string classify_in = "-", classify_colours = "RB";
  std::optional<double> classify_eps;
  classify->add_option("input", classify_in);
  classify->add_option("--colours", classify_colours, "the two colours, e.g. RB");
  classify->add_option("--eps", classify_eps, "dense classification with this eps");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact minimum covers and checks");
  std::string oracle_in = "-", oracle_kind = "matchings";
  int budget = 5;
  double oracle_eps = 0.0;
  bool long_run = false;
  oracle->add_option("input", oracle_in);
  oracle->add_option("--kind", oracle_kind, "matchings | cycles | eps-ham");
  oracle->add_option("--budget", budget);
  oracle->add_option("--eps", oracle_eps);
  oracle->add_flag("--long", long_run, "allow cycle partitions above 16 vertices");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive check over all colourings");
  std::size_t enum_n = 2;
  bool enum_reduce = false, enum_minimum = false;
  std::string enum_check = "cover5", enum_records;
  std::optional<std::size_t> enum_workers;
  enumerate->add_option("--n", enum_n);
  enumerate->add_flag("--reduce", enum_reduce, "one colouring per symmetry orbit");
  enumerate->add_option("--check", enum_check, "cover5 | two_colour3 | classify");
  enumerate->add_option("--workers", enum_workers);
  enumerate->add_option("--records", enum_records, "write per-instance JSON lines");
  enumerate->add_flag("--with-minimum", enum_minimum, "add the oracle minimum to records");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "dense cover study as CSV");
  mp::ExperimentOptions exp;
  std::string exp_eps = "0.01", exp_weights = "1,1,1", exp_out;
  bool no_timing = false;
  std::optional<std::size_t> exp_workers;
  experiment->add_option("--n", exp.n);
  experiment->add_option("--eps", exp_eps, "comma-separated eps values");
  experiment->add_option("--seeds", exp.seeds);
  experiment->add_option("--seed-base", exp.seed_base);
  experiment->add_option("--weights", exp_weights);
  experiment->add_flag("--no-timing", no_timing, "write wall_time_ms as 0");
  experiment->add_option("--workers", exp_workers);
  experiment->add_option("-o,--output", exp_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*gen) {
      mp::Graph g;
      if (gen_kind == "blowup") {
        g = mp::blowup_lower_bound(gen_r);
      } else if (gen_kind == "split") {
        g = mp::split_colouring(a1, a2, b1, b2);
      } else if (gen_kind == "figure4") {
        const auto v = parse_list<9>(gen_spec);
        mp::Figure4Spec s;
        for (std::size_t i = 0; i < 9; ++i) {
          if (v[i] < 0) throw mp::InvalidInput("block sizes must be non-negative");
          (i < 3 ? s.top[i] : s.bot[i - 3]) = static_cast<std::size_t>(v[i]);
        }
        g = mp::figure4_family(s);
      } else if (gen_kind == "random") {
        g = mp::random_colouring(gen_n, parse_list<3>(gen_weights), mp::Seed{gen_seed});
      } else if (gen_kind == "dense") {
        g = mp::random_dense(gen_n, gen_eps, parse_list<3>(gen_weights), mp::Seed{gen_seed});
      } else {
        throw mp::InvalidInput("unknown generator '" + gen_kind + "'");
      }
      write_output(gen_out, mp::graph_to_json(g).dump() + "\n");
      return kOk;
    }

    if (*solve) {
      const mp::Graph g = mp::graph_from_text(read_input(solve_in));
      mp::Cover cov;
      mp::SolveTrace trace;
      if (solve_eps) {
        const auto res = mp::dense_cover(g, mp::DenseParams::from_eps(*solve_eps));
        cov = res.cover;
        trace = res.trace;
      } else {
        mp::SolveOptions opt;
        opt.exact_ceiling = exact_ceiling;
        if (solve_mode == "auto") opt.mode = mp::SolveMode::Auto;
        else if (solve_mode == "proof") opt.mode = mp::SolveMode::ProofGuided;
        else if (solve_mode == "exact") opt.mode = mp::SolveMode::Exact;
        else throw mp::InvalidInput("unknown mode '" + solve_mode + "'");
        auto res = mp::three_colour_cover(g, opt);
        cov = std::move(res.cover);
        trace = std::move(res.trace);
      }
      const auto report = mp::verify_cover(g, cov, require_partition);
      if (!solve_trace.empty()) write_output(solve_trace, mp::trace_to_jsonl(trace));
      write_output(solve_out, mp::cover_to_json(cov).dump() + "\n");
      if (!report.ok()) {
        for (const auto& v : report.violations)
          std::cerr << mp::violation_name(v.kind) << ": " << v.detail << "\n";
        return kCheckFailed;
      }
      return kOk;
    }

    if (*verify) {
      const mp::Graph g = mp::graph_from_text(read_input(verify_graph));
      const mp::Cover cov = mp::cover_from_json(parse_json(read_input(verify_cover_path)));
      const auto report = mp::verify_cover(g, cov, verify_partition);
      mp::Json vs = mp::Json::array();
      for (const auto& v : report.violations)
        vs.push_back({{"kind", mp::violation_name(v.kind)},
                      {"matching", v.matching},
                      {"detail", v.detail}});
      std::cout << mp::Json{{"valid", report.ok()},
                            {"non_empty_matchings", cov.non_empty_count()},
                            {"violations", vs}}
                       .dump()
                << "\n";
      return report.ok() ? kOk : kCheckFailed;
    }

    if (*classify) {
      const mp::Graph g = mp::graph_from_text(read_input(classify_in));
      if (classify_colours.size() != 2) throw mp::InvalidInput("--colours takes two letters");
      const auto c1 = parse_colour(classify_colours[0]);
      const auto c2 = parse_colour(classify_colours[1]);
      mp::Json out = classify_eps ? mp::classification_to_json(
                                        mp::classify_two_dense(g, c1, c2, *classify_eps))
                                  : mp::classification_to_json(mp::classify_two(g, c1, c2));
      std::cout << out.dump() << "\n";
      return kOk;
    }

    if (*oracle) {
      const mp::Graph g = mp::graph_from_text(read_input(oracle_in));
      mp::Json out{{"kind", oracle_kind}, {"n_top", g.n_top()}, {"n_bot", g.n_bot()}};
      if (oracle_kind == "matchings") {
        const auto res = mp::min_matching_cover_exact(g, budget);
        out["found"] = res.has_value();
        if (res) {
          out["min_matchings"] = res->first;
          out["cover"] = mp::cover_to_json(res->second);
        }
      } else if (oracle_kind == "cycles") {
        if (g.n_top() + g.n_bot() > 16 && !long_run)
          throw mp::ResourceLimit("cycle oracle above 16 vertices needs --long");
        const auto res = mp::min_cycle_partition_exact(g, budget);
        out["found"] = res.has_value();
        if (res) {
          out["min_cycles"] = res->first;
          out["cycles"] = mp::cycles_to_json(res->second);
        }
      } else if (oracle_kind == "eps-ham") {
        out["eps"] = oracle_eps;
        out["eps_hamiltonian"] = mp::is_eps_hamiltonian(g, oracle_eps);
      } else {
        throw mp::InvalidInput("unknown oracle kind '" + oracle_kind + "'");
      }
      std::cout << out.dump() << "\n";
      return kOk;
    }

    if (*enumerate) {
      const auto check = mp::parse_check(enum_check);
      if (!check) throw mp::InvalidInput("unknown check '" + enum_check + "'");
      mp::EnumerateOptions opt;
      opt.n = enum_n;
      opt.reduce = enum_reduce;
      opt.check = *check;
      opt.workers = mp::worker_count(enum_workers);
      opt.records = !enum_records.empty();
      opt.record_minimum = enum_minimum;
      const auto sum = mp::run_enumerate(opt);
      if (opt.records) {
        std::string lines;
        for (const auto& r : sum.records) lines += r.dump() + "\n";
        write_output(enum_records, lines);
      }
      std::cout << mp::summary_to_json(sum).dump() << "\n";
      return sum.failures == 0 ? kOk : kCheckFailed;
    }

    if (*experiment) {
      exp.eps = parse_doubles(exp_eps);
      exp.weights = parse_list<3>(exp_weights);
      exp.timing = !no_timing;
      exp.workers = mp::worker_count(exp_workers);
      write_output(exp_out, mp::experiment_csv(mp::run_experiment(exp)));
      return kOk;
    }
  } catch (const mp::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const mp::PreconditionFailed& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kInvalid;
  } catch (const mp::PipelineIncomplete& e) {
    std::cerr << "pipeline incomplete: " << e.what() << "\n";
    return kIncomplete;
  } catch (const mp::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  }
  return kOk;
}
