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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "votectl/errors.hpp"
#include "votectl/evaluate.hpp"
#include "votectl/gadgets.hpp"
#include "votectl/instance_io.hpp"

namespace votectl {
namespace {

std::vector<std::function<Instance()>> generators() {
  const SetCover sc{3, {{1, 2}, {2, 3}, {1, 3}}, 2};
  const SetCover wide{3, {{1, 2}, {2, 3}}, 2};
  const SimpleGraph p3{3, {{0, 1}, {1, 2}}};
  return {
      [] { return example1_clique(); },
      [] { return example2_diamond(); },
      [] { return prop1_greedy_trap(); },
      [] { return prop2_tree_trap(3); },
      [] { return prop2_tree_trap(5); },
      [=] { return setcover_ecs(sc); },
      [] { return partition_line({{1, 1, 2, 2}, 2}); },
      [=] { return dks_ecs(p3, 2); },
      [=] { return msi_imer(sc, 3); },
      [=] { return msi_imer(sc, 3, true); },
      [=] { return independent_set_ecer(p3); },
      [=] { return setcover_ecer(wide); },
      [=] { return setcover_ecea_single(sc); },
      [=] { return setcover_ecea_multi(wide); },
      [] { return maxcover_imea({3, {{1, 2, 3}, {1}, {2}}, 1}, LayeredParams{}); },
      [] { return reopt_wrapper(example2_diamond()).instance; },
  };
}

TEST(GadgetsTest, EveryGeneratorIsValidAndDeterministic) {
  for (const auto& make : generators()) {
    const Instance a = make();
    EXPECT_TRUE(validate(a).empty()) << a.name;
    EXPECT_EQ(instance_to_json(a), instance_to_json(make())) << a.name;
  }
}

TEST(GadgetsTest, Example2Shape) {
  const Instance in = example2_diamond();
  EXPECT_EQ(in.node_count(), 5);
  EXPECT_EQ(in.baseline->size(), 3u);
  int random = 0;
  for (const auto& e : in.graph.edges) random += e.p != 1;
  EXPECT_EQ(random, 1);
}

TEST(GadgetsTest, Example1IsACompleteDigraph) {
  const Instance in = example1_clique();
  EXPECT_EQ(in.node_count(), 5);
  EXPECT_EQ(in.graph.edges.size(), 20u);
  EXPECT_EQ(delta(in), 4);
}

TEST(GadgetsTest, TreeTrapSizeAndTotals) {
  for (int32_t r : {3, 4, 6}) {
    const Instance in = prop2_tree_trap(r);
    EXPECT_EQ(in.node_count(), 19 * r);
  }
  const Instance in = prop2_tree_trap(3);
  const auto w = oracle::worlds(in.node_count(), in.graph.edges);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(oracle::votes(in, w[0], SeedAssignment()),
            (std::vector<int64_t>{21, 21, 15}));
}

TEST(GadgetsTest, PartitionLineStartsTiedWithSubunitWeights) {
  const PartitionInput pm{{1, 1, 2, 2}, 2};
  const Instance in = partition_line(pm);
  EXPECT_EQ(expected_mov(in, SeedAssignment(), {}, {}).exact, 0);
  for (const auto& e : in.graph.edges) {
    EXPECT_GT(e.p, 0);
    EXPECT_LE(e.p, 1);
  }
  // Line i is the directed path 5i -> 5i+4; its two random edges carry
  // 1 - p_i and w_i.
  for (size_t i = 0; i < pm.a.size(); ++i) {
    const NodeId a = static_cast<NodeId>(5 * i);
    int seen = 0;
    for (const auto& e : in.graph.edges) {
      if (e.src == a + 1 && e.dst == a + 2) {
        EXPECT_EQ(e.p, 1 - Rational(pm.a[i], 4 * 3));
        ++seen;
      }
      if (e.src == a + 2 && e.dst == a + 3) {
        EXPECT_LT(e.p, 1);
        ++seen;
      }
    }
    EXPECT_EQ(seen, 2);
  }
}

TEST(GadgetsTest, PartitionSeedingPrefersTheHeavierLines) {
  const PartitionInput pm{{1, 1, 2, 2}, 2};
  const Instance in = partition_line(pm);
  const Rational heavy = delta_mov_seeding(in, partition_seeding(pm, {2, 3}), {}).exact;
  const Rational light = delta_mov_seeding(in, partition_seeding(pm, {0, 1}), {}).exact;
  EXPECT_GT(heavy, light);
  const Rational base = oracle::expected_mov(in, in.graph.edges, SeedAssignment());
  EXPECT_EQ(heavy, oracle::expected_mov(in, in.graph.edges, partition_seeding(pm, {2, 3})) - base);
  EXPECT_EQ(light, oracle::expected_mov(in, in.graph.edges, partition_seeding(pm, {0, 1})) - base);
  EXPECT_NEAR(heavy.get_d(), 5.38040, 1e-4);
  EXPECT_NEAR(light.get_d(), 5.37891, 1e-4);
}

TEST(GadgetsTest, DksTriangle) {
  const SimpleGraph k3{3, {{0, 1}, {0, 2}, {1, 2}}};
  const Instance in = dks_ecs(k3, 3);
  EXPECT_EQ(delta_mov_seeding(in, dks_seeding(k3, {0, 1, 2}), {}).exact, 6);
}

TEST(GadgetsTest, RejectsBadParameters) {
  EXPECT_THROW(prop2_tree_trap(2), InvalidInput);
  EXPECT_THROW(setcover_ecs({3, {{1, 2}}, 0}), InvalidInput);
  EXPECT_THROW(msi_imer({2, {{1, 2}, {1}}, 1}, 2), InvalidInput);
  EXPECT_THROW(setcover_ecer({2, {{1}, {2}}, 1}), InvalidInput);
  EXPECT_THROW(independent_set_ecer({2, {{0, 1}}}), InvalidInput);
  EXPECT_THROW(partition_line({{1, 2}, 1}), InvalidInput);
}

TEST(GadgetsTest, ReoptWrapperLayout) {
  const Instance inner = example2_diamond();
  const WrappedInstance w = reopt_wrapper(inner);
  EXPECT_EQ(w.inner_nodes, 5);
  // Seed a gives a rival a lead of one.
  EXPECT_EQ(w.wrapper_seeds, score_spread(inner) + 1 + 1);
  EXPECT_EQ(w.instance.node_count(), 5 + w.wrapper_seeds + 2);
  EXPECT_EQ(w.instance.graph.addable->size(), inner.graph.addable_edges().size());
}

}  // namespace
}  // namespace votectl
