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

// Deterministic instance generators: the worked examples, the greedy traps
// and the reduction gadgets, together with the witness solutions their
// correctness arguments use.
//
// Node layouts are part of the contract so that witnesses and tests can
// address nodes directly; each builder documents its own.

#ifndef VOTECTL_GADGETS_HPP_
#define VOTECTL_GADGETS_HPP_

#include <cstdint>
#include <vector>

#include "votectl/model.hpp"
#include "votectl/sources.hpp"

namespace votectl {

// Five voters on a complete digraph, five candidates, budget 2.
Instance example1_clique();
// Positive c0 article at node 0, negative c2 article at node 1.
SeedAssignment example1_mixed_plan();

// Nodes A..E = 0..4; the seeds are the instance baseline.
Instance example2_diamond();

// Sets 0..g-1, then elements g..g+n-1, then the two cliques. Budget h+1.
Instance setcover_ecs(const SetCover& sc);
// Cover sets send a positive c1 article, the first clique-2 node a positive
// c2 article. The cover is padded to exactly h sets.
SeedAssignment setcover_ecs_witness(const SetCover& sc,
                                    const std::vector<int32_t>& cover);

// Components in order: path of 7, path of 5, path of 2, path of 4, single.
Instance prop1_greedy_trap();
SeedAssignment prop1_optimal_plan();

// Line of 7r, then stars rooted at x (2r leaves), y (r leaves) and two
// larger stars of 5r-1 and 4r-1 nodes.
Instance prop2_tree_trap(int32_t r);
SeedAssignment prop2_optimal_plan(int32_t r);
NodeId prop2_x(int32_t r);
NodeId prop2_y(int32_t r);

// Line i occupies nodes 5i..5i+4; isolated blocks follow.
Instance partition_line(const PartitionInput& pm);
// Seeds at the heads of the given 0-based lines with a positive c2 article.
SeedAssignment partition_seeding(const PartitionInput& pm,
                                 const std::vector<int32_t>& lines);

// Vertex voters 0..n-1, then one voter per source edge.
Instance dks_ecs(const SimpleGraph& g, int32_t budget);
SeedAssignment dks_seeding(const SimpleGraph& g,
                           const std::vector<int32_t>& vertices);

// For set i, nodes 2i (seed) and 2i+1; element z copy j at
// 2g + (z-1)R + j. With negative_messages every seed sends (-1, 0).
Instance msi_imer(const MsiInput& m, int32_t replication,
                  bool negative_messages = false);
std::vector<EdgeKey> msi_imer_witness(const MsiInput& m,
                                      const std::vector<int32_t>& chosen);

// Seed line, vertex nodes, one line per source edge, isolated blocks.
Instance independent_set_ecer(const SimpleGraph& g);
std::vector<EdgeKey> independent_set_ecer_witness(
    const SimpleGraph& g, const std::vector<int32_t>& independent);

// v1 = 0, v2 = 1, the line, set nodes, element lines, isolated voters.
Instance setcover_ecer(const SetCover& sc);
std::vector<EdgeKey> setcover_ecer_witness(const SetCover& sc,
                                           const std::vector<int32_t>& cover);

struct LayeredParams {
  int32_t layers = 2;
  int32_t sinks = 6;
  Rational q = Rational(1, 2);
};
Instance maxcover_imea(const MaxCoverInput& m, const LayeredParams& params);
std::vector<EdgeKey> maxcover_imea_witness(const MaxCoverInput& m,
                                           const LayeredParams& params,
                                           const std::vector<int32_t>& chosen);

Instance setcover_ecea_single(const SetCover& sc);
std::vector<EdgeKey> setcover_ecea_single_witness(
    const SetCover& sc, const std::vector<int32_t>& cover);
Instance setcover_ecea_multi(const SetCover& sc);
std::vector<EdgeKey> setcover_ecea_multi_witness(
    const SetCover& sc, const std::vector<int32_t>& cover);

// Largest score spread of any voter.
int64_t score_spread(const Instance& instance);

struct WrappedInstance {
  Instance instance;
  EdgeKey modified;
  // Inner nodes keep their ids 0..inner_nodes-1.
  int32_t inner_nodes = 0;
  int32_t wrapper_seeds = 0;
};

// Every inner voter receives enough positive c0 articles to vote c0 until
// the modified edge is switched off.
WrappedInstance reopt_wrapper(const Instance& inner);

}  // namespace votectl

#endif  // VOTECTL_GADGETS_HPP_
