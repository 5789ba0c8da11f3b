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

// Edge manipulation solvers: exhaustive oracles, the unlimited-budget
// rules, and reoptimization after a single probability change.

#ifndef VOTECTL_EDGECTL_HPP_
#define VOTECTL_EDGECTL_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "votectl/evaluate.hpp"
#include "votectl/model.hpp"
#include "votectl/seedctl.hpp"

namespace votectl {

enum class EdgeKind { kRemoval, kAddition };
enum class EdgeObjective { kMov, kInfluence };

std::string edge_kind_name(EdgeKind kind);

struct EdgePlan {
  EdgeKind kind = EdgeKind::kRemoval;
  EdgeObjective objective = EdgeObjective::kMov;
  std::vector<EdgeKey> edges;  // sorted
  Evaluation value;
  std::string solver;
  Budget budget;
};

// Expected gain of the plan: delta MoV or delta influence, signed so that
// larger is better for the manipulator.
Evaluation evaluate_edge_plan(const Instance& instance, const EdgePlan& plan,
                              const EvalConfig& config);

// Exhaustive search over edge subsets of size at most the budget, by
// cardinality and then lexicographically; the first maximum wins. The
// candidate edges default to E (removal) or the addable catalog (addition).
EdgePlan brute_force_edges(
    const Instance& instance, EdgeKind kind, EdgeObjective objective,
    Budget budget, const SolverConfig& config = {},
    const std::optional<std::vector<EdgeKey>>& candidates = std::nullopt);

EdgePlan brute_force_ecer(
    const Instance& instance, Budget budget, const SolverConfig& config = {},
    const std::optional<std::vector<EdgeKey>>& candidates = std::nullopt);
EdgePlan brute_force_ecea(
    const Instance& instance, Budget budget, const SolverConfig& config = {},
    const std::optional<std::vector<EdgeKey>>& candidates = std::nullopt);
EdgePlan brute_force_imer(
    const Instance& instance, Budget budget, const SolverConfig& config = {},
    const std::optional<std::vector<EdgeKey>>& candidates = std::nullopt);
EdgePlan brute_force_imea(
    const Instance& instance, Budget budget, const SolverConfig& config = {},
    const std::optional<std::vector<EdgeKey>>& candidates = std::nullopt);

// Unlimited budget, two candidates, one shared single-article message.
// Throws PreconditionFailed naming the failed condition.
EdgePlan unlimited_ecer_single(const Instance& instance,
                               const EvalConfig& config = {});
EdgePlan unlimited_ecea_single(const Instance& instance,
                               const EvalConfig& config = {});

// Remove every edge / add every addable edge.
EdgePlan unlimited_imer(const Instance& instance, const EvalConfig& config = {});
EdgePlan unlimited_imea(const Instance& instance, const EvalConfig& config = {});

// Number of subsets of size at most k of an m-set, saturating.
uint64_t subset_count(size_t m, size_t k);

template <class Solution>
struct Reoptimization {
  Instance modified;
  // The known solution evaluated on the modified instance.
  Evaluation known_value;
  Solution solution;
};

using EdgeSolverFn = std::function<EdgePlan(const Instance&)>;
using SeedSolverFn = std::function<SeedingPlan(const Instance&)>;

// Changes the probability of one existing or addable edge, re-evaluates the
// known solution there and runs the solver on the modified instance.
Reoptimization<EdgePlan> reopt(const Instance& instance, const EdgePlan& known,
                               EdgeKey edge, const Rational& probability,
                               const EdgeSolverFn& solver,
                               const EvalConfig& config = {});
Reoptimization<SeedingPlan> reopt(const Instance& instance,
                                  const SeedingPlan& known, EdgeKey edge,
                                  const Rational& probability,
                                  const SeedSolverFn& solver,
                                  const EvalConfig& config = {});

}  // namespace votectl

#endif  // VOTECTL_EDGECTL_HPP_
