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

// Seeded random instance families used by the property batteries and the
// benchmarks.

#ifndef VOTECTL_RANDOM_INSTANCES_HPP_
#define VOTECTL_RANDOM_INSTANCES_HPP_

#include <cstdint>
#include <vector>

#include "votectl/diffusion.hpp"
#include "votectl/model.hpp"
#include "votectl/sources.hpp"

namespace votectl {

struct RandomInstanceParams {
  int32_t min_nodes = 3;
  int32_t max_nodes = 9;
  std::vector<int32_t> candidates{2, 3, 4};
  double edge_density = 0.3;
  // Edges beyond this count get probability 1.
  int32_t max_random_edges = 4;
  std::vector<Rational> probabilities{Rational(1, 2), Rational(1, 3),
                                      Rational(2, 3)};
  // Scores are distinct draws from 0..score_range.
  int64_t score_range = 6;
};

Instance random_instance(Rng& rng, const RandomInstanceParams& params);

// Up to max_seeds seeds with messages of magnitude 1..max_magnitude.
SeedAssignment random_assignment(Rng& rng, const Instance& instance,
                                 int32_t max_seeds, int64_t max_magnitude);

struct BudgetedInstance {
  Instance instance;
  int64_t budget = 0;
};

// Instances with 1 <= delta <= B <= 4 whose exhaustive seeding search has
// at most search_cap plans; draws that miss are resampled.
BudgetedInstance random_theorem4_case(Rng& rng, uint64_t search_cap);

// Two candidates, baseline seeds sharing one single-article message and an
// explicit addable catalog.
Instance random_single_article_instance(Rng& rng, int32_t max_nodes,
                                        int32_t max_edges,
                                        int32_t max_addable);

SimpleGraph random_graph(Rng& rng, int32_t n, double density);

}  // namespace votectl

#endif  // VOTECTL_RANDOM_INSTANCES_HPP_
