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

// Slow reference implementations that share no code with the engine: a
// round-by-round cascade and an exact rational evaluator over every live
// graph.

#ifndef VOTECTL_SRC_REFERENCE_HPP_
#define VOTECTL_SRC_REFERENCE_HPP_

#include <vector>

#include "votectl/diffusion.hpp"
#include "votectl/model.hpp"

namespace votectl::reference {

// Per-seed activated sets, sorted, from a synchronous cascade in which every
// newly active node tries each live out-edge once.
std::vector<std::vector<NodeId>> timed_cascade(const Instance& instance,
                                               const LiveGraph& live,
                                               const SeedAssignment& assignment);

struct Outcome {
  Rational probability;
  std::vector<int64_t> votes;
  int64_t mov = 0;
  // Some voter had two top revised scores.
  bool tie = false;
};

// Every realization of the given edge set.
std::vector<Outcome> outcomes(const Instance& instance,
                              const std::vector<Edge>& edges,
                              const SeedAssignment& assignment);

Rational expected_mov(const std::vector<Outcome>& outcomes);

}  // namespace votectl::reference

#endif  // VOTECTL_SRC_REFERENCE_HPP_
