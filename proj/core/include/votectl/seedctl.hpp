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

#ifndef VOTECTL_SEEDCTL_HPP_
#define VOTECTL_SEEDCTL_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "votectl/evaluate.hpp"
#include "votectl/model.hpp"
#include "votectl/rational.hpp"

namespace votectl {

struct SolverConfig {
  EvalConfig eval;
  // Largest number of candidate plans or edge subsets a brute force visits.
  uint64_t search_cap = uint64_t{1} << 20;
  // Entries of the default greedy-family alphabet range over +-1..+-radius.
  int alphabet_radius = 2;
};

struct SeedingPlan {
  SeedAssignment assignment;
  Evaluation value;  // expected increase of the margin of victory
  std::string solver;
  Budget budget;
};

using MessageAlphabet = std::vector<Message>;

// q * e_c for every candidate c and 1 <= |q| <= radius, ordered by
// candidate, then q ascending.
MessageAlphabet single_candidate_alphabet(int32_t candidates, int radius);
// q * e_c for the fixed candidate c.
MessageAlphabet fixed_candidate_alphabet(int32_t candidates, CandidateId c,
                                         int radius);
// Every non-zero message with magnitude <= radius, by magnitude and then
// lexicographically.
MessageAlphabet bounded_alphabet(int32_t candidates, int64_t radius);

// The message with max(delta, 1) positive articles on c0.
Message m_star(const Instance& instance);

// 1 - 1/e rounded down to nine digits.
Rational one_minus_inv_e_lower();
// (B - delta + 1) / (2 delta B) times the rounded-down 1 - 1/e.
Rational theorem4_bound(int64_t budget, int64_t delta);
double theorem4_bound_value(int64_t budget, int64_t delta);

// Greedy expected-influence maximization; ties go to the lowest node id.
// Exact when the randomness is enumerable, Monte Carlo otherwise.
std::vector<NodeId> greedy_influence_max(const Instance& instance, int k,
                                         const SolverConfig& config = {});

// floor(B / delta) greedy influence seeds, each sending m_star.
// Throws HardToManipulate when delta > B > 0.
SeedingPlan greedy_ecs_theorem4(const Instance& instance, int64_t budget,
                                const SolverConfig& config = {});

// One way of growing a plan, with its expected gains.
struct Augmentation {
  NodeId node = 0;
  size_t message_index = 0;  // into the alphabet
  Rational mov_gain;
  Rational c0_gain;
  int64_t cost = 0;
};

// Returns the index of the chosen augmentation.
using SelectionRule = std::function<size_t(std::span<const Augmentation>)>;

// Largest MoV gain, then largest c0 gain, then lowest node id, then
// cheaper message, then earlier alphabet entry.
SelectionRule default_selection_rule();

// Augmentations (s, m) with s not yet a seed and the budget respected that
// strictly raise the expected MoV or the expected votes of c0.
std::vector<Augmentation> augmentations(const Instance& instance,
                                        const SeedAssignment& current,
                                        int64_t budget,
                                        const MessageAlphabet& alphabet,
                                        const SolverConfig& config = {});

SeedingPlan greedy_family(const Instance& instance, int64_t budget,
                          const MessageAlphabet& alphabet,
                          const SelectionRule& rule = default_selection_rule(),
                          const SolverConfig& config = {},
                          std::vector<Augmentation>* trace = nullptr);

// Number of plans with distinct seeds, alphabet messages and total cost
// within the budget, the empty plan included. Saturates at 2^63.
uint64_t ecs_search_size(int32_t nodes, const MessageAlphabet& alphabet,
                         int64_t budget);

// Exhaustive maximum of the exact expected MoV increase. Plans are visited
// by increasing seed ids and alphabet order; the first maximum wins.
SeedingPlan brute_force_ecs(const Instance& instance, int64_t budget,
                            const MessageAlphabet& alphabet,
                            const SolverConfig& config = {});
// Same, over bounded_alphabet(candidates, budget).
SeedingPlan brute_force_ecs(const Instance& instance, int64_t budget,
                            const SolverConfig& config = {});

}  // namespace votectl

#endif  // VOTECTL_SEEDCTL_HPP_
