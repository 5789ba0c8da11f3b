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

#ifndef VOTECTL_EVALUATE_HPP_
#define VOTECTL_EVALUATE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "votectl/diffusion.hpp"
#include "votectl/model.hpp"
#include "votectl/rational.hpp"

namespace votectl {

enum class Mode { kExact, kMonteCarlo };

std::string mode_name(Mode mode);
Mode parse_mode(const std::string& text);

// Workers from VOTECTL_WORKERS, else 1.
int default_workers();

struct EvalConfig {
  Mode mode = Mode::kExact;
  int64_t samples = 10'000;
  uint64_t seed = 1;
  int workers = 0;  // 0 picks default_workers()
  int enumeration_cap = 20;
  // Exact requests over too many random edges sample instead of failing.
  bool monte_carlo_fallback = false;
};

struct Evaluation {
  Mode mode = Mode::kExact;
  Rational exact = 0;
  double estimate = 0.0;
  int64_t samples = 0;
  double std_error = 0.0;

  static Evaluation of_exact(Rational v);
  double value() const;
  // "num/den" in exact mode, shortest round-trip decimal otherwise.
  std::string value_string() const;
};

// One live graph's contribution in exact mode.
struct LiveTerm {
  Rational probability;
  int64_t value = 0;
};

Evaluation expected_mov(const Instance& instance,
                        const SeedAssignment& assignment,
                        const EdgeDelta& delta, const EvalConfig& config,
                        std::vector<LiveTerm>* terms = nullptr);

// MoV with the assignment minus MoV without it, per live graph.
Evaluation delta_mov_seeding(const Instance& instance,
                             const SeedAssignment& assignment,
                             const EvalConfig& config,
                             std::vector<LiveTerm>* terms = nullptr);

// Coupled differences on the baseline seeds.
Evaluation delta_mov_edge_removal(const Instance& instance,
                                  std::span<const EdgeKey> removals,
                                  const EvalConfig& config,
                                  std::vector<LiveTerm>* terms = nullptr);
Evaluation delta_mov_edge_addition(const Instance& instance,
                                   std::span<const EdgeKey> additions,
                                   const EvalConfig& config,
                                   std::vector<LiveTerm>* terms = nullptr);

// Expected number of nodes reached from the seed set.
Evaluation expected_influence(const Instance& instance,
                              std::span<const NodeId> seeds,
                              const EdgeDelta& delta,
                              const EvalConfig& config);
// chi(E) - chi(E minus R) for the baseline seeds.
Evaluation delta_influence_removal(const Instance& instance,
                                   std::span<const EdgeKey> removals,
                                   const EvalConfig& config);
// chi(E plus A) - chi(E) for the baseline seeds.
Evaluation delta_influence_addition(const Instance& instance,
                                    std::span<const EdgeKey> additions,
                                    const EvalConfig& config);

// Expected votes of c0.
Evaluation expected_c0_votes(const Instance& instance,
                             const SeedAssignment& assignment,
                             const EdgeDelta& delta, const EvalConfig& config);

}  // namespace votectl

#endif  // VOTECTL_EVALUATE_HPP_
