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

#ifndef VOTECTL_DIFFUSION_HPP_
#define VOTECTL_DIFFUSION_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "votectl/model.hpp"
#include "votectl/rational.hpp"

namespace votectl {

using Rng = std::mt19937_64;

// Independent stream number `stream` of a master seed.
Rng derive_rng(uint64_t master_seed, uint64_t stream);

// Bernoulli draw with exact rational probability.
bool draw_bernoulli(Rng& rng, const Rational& p);

// Removals from E and additions from the addable catalog.
struct EdgeDelta {
  std::vector<EdgeKey> removals;
  std::vector<EdgeKey> additions;

  bool empty() const { return removals.empty() && additions.empty(); }
  static EdgeDelta removal(std::vector<EdgeKey> e) { return {std::move(e), {}}; }
  static EdgeDelta addition(std::vector<EdgeKey> e) { return {{}, std::move(e)}; }
};

// E after the delta. Throws InvalidInput on unknown or overlapping edges.
std::vector<Edge> apply_edge_delta(const Instance& instance,
                                   const EdgeDelta& delta);

struct LiveGraph {
  std::vector<EdgeKey> active;  // sorted
  std::optional<Rational> probability;

  bool contains(EdgeKey e) const;
};

LiveGraph sample_live_graph(const Instance& instance,
                            std::span<const Edge> edge_set, Rng& rng);

// All 2^r realizations of the r edges with 0 < p < 1. Outcome k includes
// random edge j iff bit j of k is set, in edge_set order.
std::vector<LiveGraph> enumerate_live_graphs(const Instance& instance,
                                             std::span<const Edge> edge_set,
                                             int enumeration_cap = 20);

struct InfluencedSets {
  std::vector<std::vector<NodeId>> per_seed;  // sorted, in assignment order
  std::vector<NodeId> all;                    // sorted union
};

InfluencedSets influenced_sets(const Instance& instance,
                               const LiveGraph& live,
                               const SeedAssignment& assignment);

struct FinalScores {
  int32_t candidates = 0;
  std::vector<Rational> scores;     // voter-major
  std::vector<int64_t> received;    // voter-major
  // Votes fixed by bribery, -1 when the voter is free.
  std::vector<CandidateId> pinned;

  const Rational& at(NodeId v, CandidateId c) const {
    return scores[static_cast<size_t>(v) * candidates + c];
  }
};

FinalScores revise_scores(const Instance& instance,
                          const SeedAssignment& assignment,
                          const LiveGraph& live);

struct Tally {
  std::vector<int64_t> votes;
  CandidateId winner = 0;  // lowest id among the most voted
  int64_t mov = 0;
  bool operator==(const Tally&) const = default;
};

Tally tally(const FinalScores& scores);
int64_t margin_of_victory(std::span<const int64_t> votes);

int64_t chi(const Instance& instance, const LiveGraph& live,
            const SeedAssignment& assignment);

}  // namespace votectl

#endif  // VOTECTL_DIFFUSION_HPP_
