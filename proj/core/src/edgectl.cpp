// Copyright 2026 The Authors.
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

#include "votectl/edgectl.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include "engine.hpp"
#include "votectl/errors.hpp"

namespace votectl {

using detail::Accumulator;
using detail::Engine;
using detail::Measure;
using detail::Plan;
using detail::Workspace;

namespace {

constexpr uint64_t kSaturated = uint64_t{1} << 63;
constexpr size_t kBlock = 4096;
constexpr double kLiveTableLimit = 2e8;

std::vector<EdgeKey> default_candidates(const Instance& instance,
                                        EdgeKind kind) {
  std::vector<EdgeKey> out;
  if (kind == EdgeKind::kRemoval) {
    for (const Edge& e : instance.graph.edges) out.push_back(e.key());
  } else {
    for (const Edge& e : instance.graph.addable_edges()) out.push_back(e.key());
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgePlan finish(const Instance& instance, EdgeKind kind,
                EdgeObjective objective, std::vector<EdgeKey> edges,
                std::string solver, Budget budget, const EvalConfig& config) {
  EdgePlan plan;
  plan.kind = kind;
  plan.objective = objective;
  std::sort(edges.begin(), edges.end());
  plan.edges = std::move(edges);
  plan.solver = std::move(solver);
  plan.budget = budget;
  plan.value = evaluate_edge_plan(instance, plan, config);
  return plan;
}

// Advances idx to the next k-combination of {0..m-1} in lex order.
bool next_combination(std::vector<int32_t>& idx, int32_t m) {
  const int32_t k = static_cast<int32_t>(idx.size());
  int32_t i = k - 1;
  while (i >= 0 && idx[i] == m - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

std::string edge_kind_name(EdgeKind kind) {
  return kind == EdgeKind::kRemoval ? "removal" : "addition";
}

uint64_t subset_count(size_t m, size_t k) {
  uint64_t total = 0;
  uint64_t binom = 1;  // C(m, j)
  for (size_t j = 0; j <= std::min(k, m); ++j) {
    if (j > 0) {
      // C(m, j) = C(m, j-1) * (m - j + 1) / j, exact in 128 bits.
      unsigned __int128 next =
          static_cast<unsigned __int128>(binom) * (m - j + 1) / j;
      binom = next >= kSaturated ? kSaturated : static_cast<uint64_t>(next);
    }
    total = total >= kSaturated - binom ? kSaturated : total + binom;
  }
  return total;
}

Evaluation evaluate_edge_plan(const Instance& instance, const EdgePlan& plan,
                              const EvalConfig& config) {
  if (plan.objective == EdgeObjective::kMov) {
    return plan.kind == EdgeKind::kRemoval
               ? delta_mov_edge_removal(instance, plan.edges, config)
               : delta_mov_edge_addition(instance, plan.edges, config);
  }
  return plan.kind == EdgeKind::kRemoval
             ? delta_influence_removal(instance, plan.edges, config)
             : delta_influence_addition(instance, plan.edges, config);
}

EdgePlan brute_force_edges(const Instance& instance, EdgeKind kind,
                           EdgeObjective objective, Budget budget,
                           const SolverConfig& config,
                           const std::optional<std::vector<EdgeKey>>& candidates) {
  const SeedAssignment& base = detail::baseline_of(instance);
  std::vector<EdgeKey> pool =
      candidates ? *candidates : default_candidates(instance, kind);
  std::sort(pool.begin(), pool.end());
  if (std::adjacent_find(pool.begin(), pool.end()) != pool.end()) {
    throw InvalidInput("duplicate candidate edge");
  }
  // Validates the pool against E or the catalog.
  apply_edge_delta(instance, kind == EdgeKind::kRemoval
                                 ? EdgeDelta::removal(pool)
                                 : EdgeDelta::addition(pool));
  const size_t m = pool.size();
  const size_t k_max =
      budget.is_unlimited()
          ? m
          : static_cast<size_t>(std::clamp<int64_t>(*budget.limit, 0,
                                                    static_cast<int64_t>(m)));
  if (budget.limit && *budget.limit < 0) throw InvalidInput("negative budget");
  const uint64_t count = subset_count(m, k_max);
  if (count > config.search_cap) {
    throw CapExceeded("edge subsets to search", static_cast<double>(count),
                      static_cast<double>(config.search_cap));
  }

  EvalConfig eval = config.eval;
  eval.mode = Mode::kExact;
  eval.monte_carlo_fallback = false;
  std::vector<Edge> extra;
  if (kind == EdgeKind::kAddition) extra = detail::lookup_addable(instance, pool);
  Engine engine(instance, extra);
  const std::vector<uint8_t> base_mask = engine.base_mask();
  std::vector<uint8_t> support(engine.universe().size(), 1);
  Measure measure(engine, support, eval);
  const size_t outcomes = measure.size();
  const size_t width = support.size();
  if (static_cast<double>(outcomes) * static_cast<double>(width + 1) >
      kLiveTableLimit) {
    throw CapExceeded("live-graph table entries",
                      static_cast<double>(outcomes) * (width + 1),
                      kLiveTableLimit);
  }
  std::vector<uint8_t> lives(outcomes * width);
  {
    std::vector<uint8_t> live;
    for (size_t k = 0; k < outcomes; ++k) {
      measure.fill(k, live);
      std::copy(live.begin(), live.end(), lives.begin() + k * width);
    }
  }
  std::vector<int32_t> slot(m);
  for (size_t i = 0; i < m; ++i) slot[i] = engine.find(pool[i]);

  const Plan plan = detail::compile(base, instance.candidate_count(),
                                    instance.node_count());
  const std::vector<NodeId> seeds = base.nodes();
  const int workers = std::max(1, detail::resolve_workers(eval.workers));
  std::vector<std::unique_ptr<Workspace>> spaces;
  std::vector<std::vector<uint8_t>> masks(workers, base_mask);
  for (int w = 0; w < workers; ++w) spaces.push_back(std::make_unique<Workspace>(engine));

  auto score = [&](const std::vector<int32_t>& subset, int w) {
    std::vector<uint8_t>& present = masks[w];
    const uint8_t on = kind == EdgeKind::kRemoval ? 0 : 1;
    for (int32_t i : subset) present[slot[i]] = on;
    Accumulator acc;
    for (size_t k = 0; k < outcomes; ++k) {
      const uint8_t* live = lives.data() + k * width;
      int64_t v;
      if (objective == EdgeObjective::kMov) {
        v = spaces[w]->evaluate(plan, live, present.data()).mov;
      } else {
        v = spaces[w]->chi(seeds, live, present.data());
        if (kind == EdgeKind::kRemoval) v = -v;
      }
      acc.add(measure, k, v);
    }
    for (int32_t i : subset) present[slot[i]] = base_mask[slot[i]];
    return acc;
  };

  std::vector<int32_t> best_subset;
  Accumulator best = score(best_subset, 0);
  std::vector<std::vector<int32_t>> block;
  std::vector<Accumulator> values;
  auto flush = [&] {
    values.assign(block.size(), Accumulator());
    detail::parallel_for(block.size(), workers, [&](size_t i, int w) {
      values[i] = score(block[i], w);
    });
    for (size_t i = 0; i < block.size(); ++i) {
      if (values[i].compare(best) > 0) {
        best = values[i];
        best_subset = block[i];
      }
    }
    block.clear();
  };
  for (size_t size = 1; size <= k_max; ++size) {
    std::vector<int32_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      block.push_back(idx);
      if (block.size() == kBlock) flush();
    } while (next_combination(idx, static_cast<int32_t>(m)));
  }
  flush();

  std::vector<EdgeKey> chosen;
  for (int32_t i : best_subset) chosen.push_back(pool[i]);
  const char* tag = objective == EdgeObjective::kMov
                        ? (kind == EdgeKind::kRemoval ? "brute-force-ecer"
                                                      : "brute-force-ecea")
                        : (kind == EdgeKind::kRemoval ? "brute-force-imer"
                                                      : "brute-force-imea");
  return finish(instance, kind, objective, std::move(chosen), tag, budget, eval);
}

EdgePlan brute_force_ecer(const Instance& instance, Budget budget,
                          const SolverConfig& config,
                          const std::optional<std::vector<EdgeKey>>& candidates) {
  return brute_force_edges(instance, EdgeKind::kRemoval, EdgeObjective::kMov,
                           budget, config, candidates);
}

EdgePlan brute_force_ecea(const Instance& instance, Budget budget,
                          const SolverConfig& config,
                          const std::optional<std::vector<EdgeKey>>& candidates) {
  return brute_force_edges(instance, EdgeKind::kAddition, EdgeObjective::kMov,
                           budget, config, candidates);
}

EdgePlan brute_force_imer(const Instance& instance, Budget budget,
                          const SolverConfig& config,
                          const std::optional<std::vector<EdgeKey>>& candidates) {
  return brute_force_edges(instance, EdgeKind::kRemoval,
                           EdgeObjective::kInfluence, budget, config,
                           candidates);
}

EdgePlan brute_force_imea(const Instance& instance, Budget budget,
                          const SolverConfig& config,
                          const std::optional<std::vector<EdgeKey>>& candidates) {
  return brute_force_edges(instance, EdgeKind::kAddition,
                           EdgeObjective::kInfluence, budget, config,
                           candidates);
}

namespace {

// The shared message of a two-candidate single-article setting.
const Message& shared_single_message(const Instance& instance) {
  if (instance.candidate_count() != 2) {
    throw PreconditionFailed("requires exactly two candidates, got " +
                             std::to_string(instance.candidate_count()));
  }
  const SeedAssignment& base = detail::baseline_of(instance);
  if (base.empty()) throw PreconditionFailed("requires at least one seed");
  if (!base.is_single_news_article_setting()) {
    throw PreconditionFailed(
        "requires every seed to send the same single-news-article message");
  }
  return base.entries().front().message;
}

}  // namespace

EdgePlan unlimited_ecer_single(const Instance& instance,
                               const EvalConfig& config) {
  const Message& m = shared_single_message(instance);
  // A message that hurts c0 should reach as few voters as possible.
  const bool hurts = m.news[0] == -1 || m.news[1] == 1;
  std::vector<EdgeKey> edges;
  if (hurts) edges = default_candidates(instance, EdgeKind::kRemoval);
  return finish(instance, EdgeKind::kRemoval, EdgeObjective::kMov,
                std::move(edges), "obs1", Budget::unlimited(), config);
}

EdgePlan unlimited_ecea_single(const Instance& instance,
                               const EvalConfig& config) {
  const Message& m = shared_single_message(instance);
  const bool helps = m.news[0] == 1 || m.news[1] == -1;
  std::vector<EdgeKey> edges;
  if (helps) edges = default_candidates(instance, EdgeKind::kAddition);
  return finish(instance, EdgeKind::kAddition, EdgeObjective::kMov,
                std::move(edges), "obs2", Budget::unlimited(), config);
}

EdgePlan unlimited_imer(const Instance& instance, const EvalConfig& config) {
  detail::baseline_of(instance);
  return finish(instance, EdgeKind::kRemoval, EdgeObjective::kInfluence,
                default_candidates(instance, EdgeKind::kRemoval),
                "unlimited-imer", Budget::unlimited(), config);
}

EdgePlan unlimited_imea(const Instance& instance, const EvalConfig& config) {
  detail::baseline_of(instance);
  return finish(instance, EdgeKind::kAddition, EdgeObjective::kInfluence,
                default_candidates(instance, EdgeKind::kAddition),
                "unlimited-imea", Budget::unlimited(), config);
}

Reoptimization<EdgePlan> reopt(const Instance& instance, const EdgePlan& known,
                               EdgeKey edge, const Rational& probability,
                               const EdgeSolverFn& solver,
                               const EvalConfig& config) {
  Reoptimization<EdgePlan> out{
      with_edge_probability(instance, edge, probability), {}, {}};
  out.known_value = evaluate_edge_plan(out.modified, known, config);
  out.solution = solver(out.modified);
  return out;
}

Reoptimization<SeedingPlan> reopt(const Instance& instance,
                                  const SeedingPlan& known, EdgeKey edge,
                                  const Rational& probability,
                                  const SeedSolverFn& solver,
                                  const EvalConfig& config) {
  Reoptimization<SeedingPlan> out{
      with_edge_probability(instance, edge, probability), {}, {}};
  out.known_value = delta_mov_seeding(out.modified, known.assignment, config);
  out.solution = solver(out.modified);
  return out;
}

}  // namespace votectl
