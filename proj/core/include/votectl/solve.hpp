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

// Solver dispatch by name, shared by the command line and the suites.

#ifndef VOTECTL_SOLVE_HPP_
#define VOTECTL_SOLVE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "votectl/edgectl.hpp"
#include "votectl/seedctl.hpp"

namespace votectl {

struct SolveResult {
  std::string manipulation;
  std::optional<SeedingPlan> seeding;
  std::optional<EdgePlan> edges;

  const Evaluation& value() const;
};

std::vector<std::string> solver_names();

// The budget falls back to the one stored in the instance. Seeding solvers
// refuse an unlimited budget.
SolveResult solve(const Instance& instance, const std::string& solver,
                  std::optional<Budget> budget, const SolverConfig& config);

}  // namespace votectl

#endif  // VOTECTL_SOLVE_HPP_
