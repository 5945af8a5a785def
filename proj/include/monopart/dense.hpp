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

#ifndef MONOPART_DENSE_HPP
#define MONOPART_DENSE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monopart/components.hpp"
#include "monopart/cover.hpp"
#include "monopart/errors.hpp"
#include "monopart/graph.hpp"
#include "monopart/matching.hpp"
#include "monopart/solver.hpp"
#include "monopart/structure.hpp"
#include "monopart/trace.hpp"

namespace monopart {

struct DenseResult {
  Cover cover;
  SolveTrace trace;
  double uncovered_top_frac = 0.0;
  double uncovered_bot_frac = 0.0;
  bool within_rho = true;  // both fractions at most params.rho
};

namespace detail {

struct DenseCtx {
  const Graph& g;
  const DenseParams& p;
  VertexMask kept;  // vertices surviving the degree pruning
};

// A component of the masked subgraph counts as γ-non-trivial when both of its
// sides hold at least max(1, γ·side) vertices of the mask.
inline bool big_enough(const MonoComponent& comp, const VertexMask& mask, double gamma) {
  const double nt = static_cast<double>(mask.count_top());
  const double nb = static_cast<double>(mask.count_bot());
  return !comp.top.empty() && !comp.bot.empty() &&
         at_least(static_cast<double>(comp.top.size()), gamma * nt) &&
         at_least(static_cast<double>(comp.bot.size()), gamma * nb);
}

inline std::vector<MonoComponent> big_components(const Graph& g, Colour c,
                                                 const VertexMask& mask, double gamma) {
  std::vector<MonoComponent> out;
  for (auto& comp : components_within(g, c, mask))
    if (big_enough(comp, mask, gamma)) out.push_back(std::move(comp));
  return out;
}

// Repeatedly takes the largest maximum matching over the components of the
// allowed colours inside `mask`, until `budget` matchings or nothing left.
inline Matchings greedy_fill(const Graph& g, VertexMask mask,
                             const std::vector<Colour>& colours, std::size_t budget) {
  Matchings out;
  while (out.size() < budget) {
    Matching best;
    Colour best_c = Colour::Red;
    for (auto c : colours)
      for (const auto& comp : components_within(g, c, mask)) {
        if (!comp.non_trivial() || std::min(comp.top.size(), comp.bot.size()) <= best.size())
          continue;
        Matching m = max_matching_in(g, comp, mask);
        if (m.size() > best.size()) {
          best = std::move(m);
          best_c = c;
        }
      }
    if (best.empty()) break;
    mask.remove(best);
    out.push_back({best_c, std::move(best), std::nullopt});
  }
  return out;
}

inline std::size_t covered(const Matchings& ms) {
  std::size_t k = 0;
  for (const auto& m : ms) k += m.size();
  return k;
}

// Dense two-colour finish of a residue: classify the residue (first colour
// pair not containing `banned`) and follow the matching recipe of the
// matching case; compare against a greedy fill and keep the larger.
inline Matchings dense_two_finish(const Graph& g, const VertexMask& mask,
                                  Colour banned, std::size_t budget) {
  std::vector<Colour> cs;
  for (auto c : kColours)
    if (c != banned) cs.push_back(c);
  Matchings greedy = greedy_fill(g, mask, cs, budget);
  if (mask.empty() || budget < 2) return greedy;

  const IndexSet top = mask.top_list(), bot = mask.bot_list();
  const Graph sub = g.induced(top, bot).without_colour(banned);
  double worst = 1.0;
  for (std::size_t t = 0; t < sub.n_top(); ++t)
    worst = std::min(worst, static_cast<double>(sub.degree_top(t)) /
                                static_cast<double>(std::max<std::size_t>(1, sub.n_bot())));
  for (std::size_t b = 0; b < sub.n_bot(); ++b)
    worst = std::min(worst, static_cast<double>(sub.degree_bot(b)) /
                                static_cast<double>(std::max<std::size_t>(1, sub.n_top())));
  // Smallest ε with (1-ε)-complete degree, nudged to keep the inequality strict.
  const double eps_w = 1.0 - worst + 1e-6;
  if (!(eps_w < 1.0 / 6.0)) return greedy;

  Matchings recipe;
  try {
    const auto cls = classify_two_dense(sub, cs[0], cs[1], eps_w);
    VertexMask left = VertexMask::all(sub);
    auto take = [&](const MonoComponent& comp) {
      Matching m = max_matching_in(sub, comp, left);
      left.remove(m);
      push_non_empty(recipe, comp.colour, std::move(m));
    };
    if (cls.kind == DenseTwoColourClass::Kind::EpsSplit) {
      if (budget < 3) return greedy;
      take(cls.witness[0]);
      take(cls.witness[1]);
      Matching m3 = max_matching_in(sub, cls.witness[2], left);
      Matching m4 = max_matching_in(sub, cls.witness[3], left);
      push_non_empty(recipe, cs[1], m3.size() >= m4.size() ? std::move(m3) : std::move(m4));
    } else {
      const MonoComponent& r = cls.witness[0];
      take(r);
      const Colour other = r.colour == cs[0] ? cs[1] : cs[0];
      Matchings rest = greedy_fill(sub, left, {other}, 1);
      recipe.insert(recipe.end(), rest.begin(), rest.end());
    }
  } catch (const Error&) {
    return greedy;
  }
  if (covered(recipe) <= covered(greedy)) return greedy;
  for (auto& m : recipe)
    for (auto& [t, b] : m.pairs) {
      t = top[t];
      b = bot[b];
    }
  return recipe;
}

struct DenseCandidate {
  Stage stage;
  std::string branch;
  Matchings ms;
};

inline std::optional<DenseCandidate> dense_claim1(const DenseCtx& x) {
  for (auto c : kColours) {
    const auto big = big_components(x.g, c, x.kept, x.p.gamma);
    if (big.size() > 2) continue;
    Matchings ms;
    VertexMask left = x.kept;
    for (const auto& comp : big) {
      Matching m = max_matching_in(x.g, comp, left);
      left.remove(m);
      push_non_empty(ms, c, std::move(m));
    }
    auto rest = dense_two_finish(x.g, left, c, 5 - ms.size());
    return DenseCandidate{Stage::Claim1Branch,
                          std::string("colour ") + colour_char(c) + " has " +
                              std::to_string(big.size()) + " gamma-non-trivial components",
                          concat(ms, rest)};
  }
  return std::nullopt;
}

inline std::optional<DenseCandidate> dense_claim2(const DenseCtx& x) {
  std::vector<MonoComponent> big;
  for (auto c : kColours)
    for (auto& comp : big_components(x.g, c, x.kept, x.p.gamma)) big.push_back(std::move(comp));
  const double nt = static_cast<double>(x.kept.count_top());
  const double nb = static_cast<double>(x.kept.count_bot());
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      const auto& r = big[i];
      const auto& b = big[j];
      if (r.colour == b.colour) continue;
      const double ut = static_cast<double>(set_union(r.top, b.top).size());
      const double ub = static_cast<double>(set_union(r.bot, b.bot).size());
      if (!at_least(ut, (1.0 - x.p.delta) * nt) || !at_least(ub, (1.0 - x.p.delta) * nb))
        continue;
      Matchings ms;
      VertexMask left = x.kept;
      Matching mr = max_matching_in(x.g, r, left);
      left.remove(mr);
      Matching mb = max_matching_in(x.g, b, left);
      left.remove(mb);
      push_non_empty(ms, r.colour, std::move(mr));
      push_non_empty(ms, b.colour, std::move(mb));
      auto rest = greedy_fill(x.g, left, {kColours.begin(), kColours.end()}, 5 - ms.size());
      return DenseCandidate{Stage::Claim2Branch,
                            std::string(1, colour_char(r.colour)) + std::to_string(r.id) +
                                " + " + colour_char(b.colour) + std::to_string(b.id) +
                                " (1-delta)-span",
                            concat(ms, rest)};
    }
  return std::nullopt;
}

inline std::optional<DenseCandidate> dense_split_residue(const DenseCtx& x) {
  for (auto c : kColours) {
    const auto big = big_components(x.g, c, x.kept, x.p.delta);
    if (big.size() != 3) continue;
    Matchings ms;
    VertexMask left = x.kept;
    for (const auto& comp : big) {
      Matching m = max_matching_in(x.g, comp, left);
      left.remove(m);
      push_non_empty(ms, c, std::move(m));
    }
    auto rest = dense_two_finish(x.g, left, c, 5 - ms.size());
    return DenseCandidate{Stage::SplitResidue,
                          std::string("colour ") + colour_char(c) +
                              " has 3 delta-non-trivial components",
                          concat(ms, rest)};
  }
  return std::nullopt;
}

}  // namespace detail

/// Robust cover of a balanced (1-ε)-dense graph by at most five connected
/// matchings. Vertices of low degree are peeled first and left uncovered;
/// the stages mirror three_colour_cover with dense predicates, and the
/// candidate leaving the fewest vertices uncovered is returned. Complete
/// inputs are first handed to three_colour_cover.
inline DenseResult dense_cover(const Graph& g, const DenseParams& params) {
  if (!g.is_balanced()) throw PreconditionFailed("graph is not balanced");
  if (!is_gamma_dense(g, 1.0 - params.eps))
    throw PreconditionFailed("graph is not (1-eps)-dense");

  DenseResult res;
  const double n = static_cast<double>(std::max<std::size_t>(1, g.n_top()));
  auto finish = [&](Cover cov) {
    if (cov.non_empty_count() > 5 || !verify_cover(g, cov, false).ok())
      throw PipelineIncomplete("internal error: dense cover failed verification");
    res.cover = std::move(cov);
    res.uncovered_top_frac = static_cast<double>(res.cover.uncovered_top.size()) / n;
    res.uncovered_bot_frac = static_cast<double>(res.cover.uncovered_bot.size()) / n;
    res.within_rho = res.uncovered_top_frac <= params.rho + 1e-12 &&
                     res.uncovered_bot_frac <= params.rho + 1e-12;
    return res;
  };

  if (g.is_complete()) {
    try {
      SolveOptions opt;
      opt.mode = g.n_top() <= opt.exact_ceiling ? SolveMode::Auto : SolveMode::ProofGuided;
      auto exact = three_colour_cover(g, opt);
      res.trace = std::move(exact.trace);
      return finish(std::move(exact.cover));
    } catch (const PipelineIncomplete&) {
      res.trace.add(Stage::Preprocess, "complete input: exact pipeline incomplete");
    }
  }

  const InducedSubgraph pruned = prune_to_complete_degree(g, params.eps);
  detail::DenseCtx ctx{g, params, VertexMask::of(g, pruned.top, pruned.bot)};
  res.trace.add(Stage::Preprocess,
                "kept " + std::to_string(pruned.top.size()) + "/" +
                    std::to_string(pruned.bot.size()) +
                    (pruned.warning ? " (peeled more than sqrt(eps)*n)" : ""));

  std::vector<detail::DenseCandidate> cands;
  if (auto c = detail::dense_claim1(ctx)) cands.push_back(std::move(*c));
  else res.trace.add(Stage::Claim1Branch, "skipped: every colour has >= 3 gamma-non-trivial components");
  if (auto c = detail::dense_claim2(ctx)) cands.push_back(std::move(*c));
  else res.trace.add(Stage::Claim2Branch, "skipped: no two components (1-delta)-span");
  if (auto c = detail::dense_split_residue(ctx)) cands.push_back(std::move(*c));
  else res.trace.add(Stage::SplitResidue, "skipped: no colour has exactly 3 delta-non-trivial components");
  cands.push_back({Stage::GreedyResidue, "largest matchings first",
                   detail::greedy_fill(g, ctx.kept, {kColours.begin(), kColours.end()}, 5)});

  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i)
    if (detail::covered(cands[i].ms) > detail::covered(cands[best].ms)) best = i;
  for (std::size_t i = 0; i < cands.size(); ++i)
    res.trace.add(cands[i].stage,
                  cands[i].branch + "; covers " + std::to_string(2 * detail::covered(cands[i].ms)) +
                      " vertices" + (i == best ? "; selected" : ""),
                  cands[i].ms);
  return finish(make_cover(g, cands[best].ms));
}

}  // namespace monopart

#endif  // MONOPART_DENSE_HPP
