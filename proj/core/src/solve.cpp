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

#include "votectl/solve.hpp"

#include "votectl/errors.hpp"
#include "votectl/results.hpp"

namespace votectl {

const Evaluation& SolveResult::value() const {
  return seeding ? seeding->value : edges->value;
}

std::vector<std::string> solver_names() {
  return {"theorem4",  "greedy-family", "brute-ecs",      "brute-ecer",
          "brute-ecea", "brute-imer",   "brute-imea",     "obs1",
          "obs2",       "unlimited-imer", "unlimited-imea"};
}

namespace {

int64_t finite_budget(const Budget& b) {
  if (b.is_unlimited()) {
    throw PreconditionFailed(
        "seeding with an unlimited budget is trivial: the manipulator can "
        "make all the nodes be seeds");
  }
  return *b.limit;
}

void require_unlimited(const std::optional<Budget>& b, const std::string& solver) {
  if (b && !b->is_unlimited()) {
    throw PreconditionFailed(solver + " requires an unlimited budget");
  }
}

SolveResult of_edges(EdgePlan plan) {
  SolveResult r;
  r.manipulation = manipulation_name(plan);
  r.edges = std::move(plan);
  return r;
}

}  // namespace

SolveResult solve(const Instance& instance, const std::string& solver,
                  std::optional<Budget> budget, const SolverConfig& config) {
  require_valid(instance);
  std::optional<Budget> given = budget ? budget : instance.budget;
  auto need = [&]() -> Budget {
    if (!given) throw InvalidInput("solver " + solver + " needs a budget");
    return *given;
  };
  if (solver == "theorem4" || solver == "greedy-family" || solver == "brute-ecs") {
    const int64_t b = finite_budget(need());
    SolveResult r;
    r.manipulation = "seeding";
    if (solver == "theorem4") {
      r.seeding = greedy_ecs_theorem4(instance, b, config);
    } else if (solver == "greedy-family") {
      r.seeding = greedy_family(
          instance, b,
          single_candidate_alphabet(instance.candidate_count(),
                                    config.alphabet_radius),
          default_selection_rule(), config);
    } else {
      r.seeding = brute_force_ecs(instance, b, config);
    }
    return r;
  }
  if (solver == "brute-ecer") return of_edges(brute_force_ecer(instance, need(), config));
  if (solver == "brute-ecea") return of_edges(brute_force_ecea(instance, need(), config));
  if (solver == "brute-imer") return of_edges(brute_force_imer(instance, need(), config));
  if (solver == "brute-imea") return of_edges(brute_force_imea(instance, need(), config));
  if (solver == "obs1" || solver == "obs2" || solver == "unlimited-imer" ||
      solver == "unlimited-imea") {
    require_unlimited(budget, solver);
    if (solver == "obs1") return of_edges(unlimited_ecer_single(instance, config.eval));
    if (solver == "obs2") return of_edges(unlimited_ecea_single(instance, config.eval));
    if (solver == "unlimited-imer") return of_edges(unlimited_imer(instance, config.eval));
    return of_edges(unlimited_imea(instance, config.eval));
  }
  throw InvalidInput("unknown solver: " + solver);
}

}  // namespace votectl
