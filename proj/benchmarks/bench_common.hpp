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

#pragma once

#include <cstdint>
#include <vector>

#include "votectl/model.hpp"

namespace votectl::bench {

// A line of n voters over three candidates whose edges all have
// probability 1/2. Seeds sit at the even nodes.
inline Instance coin_line(int32_t n) {
  Instance in;
  in.name = "coin-line";
  in.scores = ScoreProfile(0, 3);
  for (int32_t i = 0; i < n; ++i) {
    in.scores.push_row(std::vector<int64_t>{i % 3, (i + 1) % 3, (i + 2) % 3});
  }
  in.graph.node_count = n;
  for (int32_t i = 0; i + 1 < n; ++i) in.graph.add_edge(i, i + 1, Rational(1, 2));
  SeedAssignment seeds;
  for (int32_t i = 0; i < n; i += 2) seeds.add(i, Message({1, 0, 0}));
  in.baseline = seeds;
  return in;
}

}  // namespace votectl::bench
