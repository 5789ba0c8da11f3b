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
#include "votectl/edgectl.hpp"
#include "votectl/gadgets.hpp"
#include "votectl/random_instances.hpp"

namespace votectl {
namespace {

Instance shared_message(std::vector<int64_t> news) {
  Instance in;
  in.scores = ScoreProfile(0, 2);
  for (auto row : {std::vector<int64_t>{1, 0}, {0, 1}, {1, 0}, {0, 1}}) {
    in.scores.push_row(row);
  }
  in.graph.node_count = 4;
  in.graph.add_edge(0, 1, Rational(1, 2));
  in.graph.add_edge(1, 2);
  in.graph.add_edge(2, 3, Rational(2, 3));
  in.graph.addable = std::vector<Edge>{{0, 3, Rational(1, 3)}, {3, 1, 1}};
  in.baseline = SeedAssignment();
  in.baseline->add(0, Message(news));
  return in;
}

std::vector<EdgeKey> keys(const std::vector<Edge>& edges) {
  std::vector<EdgeKey> out;
  for (const auto& e : edges) out.push_back(e.key());
  return out;
}

TEST(SubsetCountTest, Binomials) {
  EXPECT_EQ(subset_count(5, 0), 1u);
  EXPECT_EQ(subset_count(5, 2), 16u);
  EXPECT_EQ(subset_count(20, 20), uint64_t{1} << 20);
}

TEST(UnlimitedSingleTest, RemovalRule) {
  const Instance hurt = shared_message({-1, 0});
  EXPECT_EQ(unlimited_ecer_single(hurt).edges, keys(hurt.graph.edges));
  const Instance helps = shared_message({1, 0});
  EXPECT_TRUE(unlimited_ecer_single(helps).edges.empty());
  const Instance rival = shared_message({0, 1});
  EXPECT_EQ(unlimited_ecer_single(rival).edges, keys(rival.graph.edges));
}

TEST(UnlimitedSingleTest, AdditionRule) {
  const Instance helps = shared_message({1, 0});
  EXPECT_EQ(unlimited_ecea_single(helps).edges, keys(helps.graph.addable_edges()));
  EXPECT_TRUE(unlimited_ecea_single(shared_message({0, 1})).edges.empty());
  EXPECT_EQ(unlimited_ecea_single(shared_message({0, -1})).edges.size(), 2u);
}

TEST(UnlimitedSingleTest, Preconditions) {
  Instance three;
  three.scores = ScoreProfile(0, 3);
  three.scores.push_row(std::vector<int64_t>{0, 1, 2});
  three.graph.node_count = 1;
  three.baseline = SeedAssignment();
  three.baseline->add(0, Message({1, 0, 0}));
  EXPECT_THROW(unlimited_ecer_single(three), PreconditionFailed);

  Instance mixed = shared_message({1, 0});
  mixed.baseline->add(2, Message({0, 1}));
  EXPECT_THROW(unlimited_ecea_single(mixed), PreconditionFailed);
}

TEST(UnlimitedSingleTest, OptimalOnSmallRandomInstances) {
  Rng rng = derive_rng(41, 0);
  for (int t = 0; t < 20; ++t) {
    const Instance in = random_single_article_instance(rng, 6, 8, 6);
    EXPECT_EQ(unlimited_ecer_single(in).value.exact,
              oracle::best_removal(in, 64, oracle::Goal::kMov));
    EXPECT_EQ(unlimited_ecea_single(in).value.exact,
              oracle::best_addition(in, 64, oracle::Goal::kMov));
  }
}

TEST(UnlimitedInfluenceTest, RemovingEverythingLeavesTheSeeds) {
  const Instance in = shared_message({1, 0});
  const EdgePlan plan = unlimited_imer(in);
  const std::vector<NodeId> seeds{0};
  EXPECT_EQ(plan.value.exact, expected_influence(in, seeds, {}, {}).exact - 1);
  EXPECT_EQ(unlimited_imea(in).edges.size(), 2u);
}

TEST(BruteForceEdgesTest, MatchesTheOracle) {
  Rng rng = derive_rng(42, 0);
  for (int t = 0; t < 30; ++t) {
    const Instance in = random_single_article_instance(rng, 6, 7, 5);
    const int64_t b = std::uniform_int_distribution<int64_t>(0, 3)(rng);
    const Budget budget = Budget::of(b);
    EXPECT_EQ(brute_force_ecer(in, budget).value.exact,
              oracle::best_removal(in, b, oracle::Goal::kMov));
    EXPECT_EQ(brute_force_ecea(in, budget).value.exact,
              oracle::best_addition(in, b, oracle::Goal::kMov));
    EXPECT_EQ(brute_force_imer(in, budget).value.exact,
              oracle::best_removal(in, b, oracle::Goal::kInfluence));
    EXPECT_EQ(brute_force_imea(in, budget).value.exact,
              oracle::best_addition(in, b, oracle::Goal::kInfluence));
  }
}

TEST(BruteForceEdgesTest, ZeroBudgetAndPlanShape) {
  const Instance in = shared_message({-1, 0});
  const EdgePlan none = brute_force_ecer(in, Budget::of(0));
  EXPECT_TRUE(none.edges.empty());
  EXPECT_EQ(none.value.exact, 0);
  const EdgePlan plan = brute_force_ecer(in, Budget::unlimited());
  EXPECT_TRUE(std::is_sorted(plan.edges.begin(), plan.edges.end()));
  EXPECT_EQ(plan.solver, "brute-force-ecer");
  EXPECT_EQ(evaluate_edge_plan(in, plan, {}).exact, plan.value.exact);
}

TEST(BruteForceEdgesTest, CapIsEnforced) {
  const Instance in = independent_set_ecer({3, {{0, 1}, {0, 2}, {1, 2}}});
  SolverConfig cfg;
  cfg.search_cap = 1024;
  EXPECT_THROW(brute_force_ecer(in, Budget::unlimited(), cfg), CapExceeded);
}

TEST(HardnessGadgetTest, IndependentSetRemoval) {
  const SimpleGraph two_k2{4, {{0, 1}, {2, 3}}};
  const Instance in = independent_set_ecer(two_k2);
  EXPECT_EQ(brute_force_ecer(in, Budget::unlimited()).value.exact, 2);
  EXPECT_EQ(delta_mov_edge_removal(
                in, independent_set_ecer_witness(two_k2, {0, 2}), {})
                .exact,
            2);
}

TEST(HardnessGadgetTest, MsiRemovalPicksOneSetEdge) {
  const MsiInput m{3, {{1, 2}, {2, 3}, {1, 3}}, 2};
  const Instance in = msi_imer(m, 4);
  const EdgePlan plan = brute_force_imer(in, *in.budget);
  EXPECT_EQ(plan.value.exact, m.g() - m.h + msi_opt(m) * 4);
  ASSERT_EQ(plan.edges.size(), 1u);
  // Set i occupies nodes 2i and 2i+1, joined by one edge.
  const EdgeKey e = plan.edges[0];
  EXPECT_EQ(e.src % 2, 0);
  EXPECT_EQ(e.dst, e.src + 1);
  EXPECT_LT(e.src, 2 * m.g());
}

TEST(HardnessGadgetTest, SingleArticleAdditionYesAndNo) {
  const SetCover yes{3, {{1, 2}, {2, 3}, {1, 3}}, 2};
  EXPECT_EQ(brute_force_ecea(setcover_ecea_single(yes), Budget::unlimited()).value.exact, 1);
  const SetCover no{3, {{1, 2}, {2, 3}, {1, 3}}, 1};
  EXPECT_EQ(brute_force_ecea(setcover_ecea_single(no), Budget::unlimited()).value.exact, 0);
}

TEST(HardnessGadgetTest, MaxCoverAdditionPrefersTheAlignedCover) {
  const MaxCoverInput m{3, {{1, 2, 3}, {1}, {2}}, 1};
  const LayeredParams lp;
  const Instance in = maxcover_imea(m, lp);
  const Rational aligned =
      delta_influence_addition(in, maxcover_imea_witness(m, lp, {0}), {}).exact;
  for (int32_t other : {1, 2}) {
    EXPECT_GT(aligned,
              delta_influence_addition(in, maxcover_imea_witness(m, lp, {other}), {})
                  .exact);
  }
}

TEST(ReoptTest, IdentityChangeKeepsTheValue) {
  const Instance in = shared_message({-1, 0});
  const EdgePlan known = brute_force_ecer(in, Budget::of(1));
  const auto r = reopt(in, known, {0, 1}, Rational(1, 2), [](const Instance& x) {
    return brute_force_ecer(x, Budget::of(1));
  });
  EXPECT_EQ(r.known_value.exact, known.value.exact);
  EXPECT_EQ(r.solution.value.exact, known.value.exact);
}

TEST(ReoptTest, WrapperHidesTheInnerInstanceUntilTheChange) {
  Instance inner;
  inner.scores = ScoreProfile(0, 2);
  for (auto row : {std::vector<int64_t>{1, 0}, {1, 0}, {0, 1}}) inner.scores.push_row(row);
  inner.graph.node_count = 3;
  inner.graph.add_edge(0, 1, Rational(1, 2));
  inner.graph.add_edge(1, 2);
  inner.baseline = SeedAssignment();
  inner.baseline->add(0, Message({-1, 0}));
  const auto solver = [](const Instance& x) {
    return brute_force_ecer(x, Budget::unlimited());
  };
  const WrappedInstance w = reopt_wrapper(inner);
  EXPECT_EQ(w.inner_nodes, 3);
  const EdgePlan before = solver(w.instance);
  EXPECT_TRUE(before.edges.empty());
  const auto after = reopt(w.instance, before, w.modified, Rational(0), solver);
  EXPECT_EQ(after.solution.value.exact, solver(inner).value.exact);
  EXPECT_EQ(after.solution.value.exact, 1);
}

}  // namespace
}  // namespace votectl
