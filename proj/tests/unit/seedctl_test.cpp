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

#include <cmath>

#include "oracle.hpp"
#include "votectl/errors.hpp"
#include "votectl/evaluate.hpp"
#include "votectl/gadgets.hpp"
#include "votectl/random_instances.hpp"
#include "votectl/seedctl.hpp"

namespace votectl {
namespace {

Instance profile(std::vector<std::vector<int64_t>> rows) {
  Instance in;
  in.scores = ScoreProfile(0, static_cast<int32_t>(rows[0].size()));
  for (const auto& r : rows) in.scores.push_row(r);
  in.graph.node_count = static_cast<int32_t>(rows.size());
  return in;
}

TEST(MessageAlphabetTest, Sizes) {
  EXPECT_EQ(single_candidate_alphabet(3, 2).size(), 12u);
  EXPECT_EQ(fixed_candidate_alphabet(5, 2, 2).size(), 4u);
  for (const Message& m : fixed_candidate_alphabet(5, 2, 2)) {
    EXPECT_TRUE(m.is_single_news_article() || m.magnitude() == 2);
    EXPECT_EQ(m.news[0] | m.news[1] | m.news[3] | m.news[4], 0);
  }
  // Nonzero integer vectors in Z^2 with L1 norm at most 2.
  const auto all = bounded_alphabet(2, 2);
  EXPECT_EQ(all.size(), 12u);
  for (size_t i = 1; i < all.size(); ++i) {
    EXPECT_LE(all[i - 1].magnitude(), all[i].magnitude());
  }
}

TEST(MStarTest, ClampedAtOne) {
  EXPECT_EQ(m_star(profile({{0, 3}, {2, 1}})), Message({3, 0}));
  EXPECT_EQ(m_star(profile({{4, 1, 0}})), Message({1, 0, 0}));
}

TEST(MStarTest, ClosesTheExactGap) {
  const Instance in = profile({{0, 4}});
  const Rational eps = epsilon(in);
  const Message m = m_star(in);
  const Rational c0 = (1 - eps) * 0 + m.news[0];
  const Rational c1 = (1 - eps) * 4;
  EXPECT_EQ(c0 - c1, eps * 4);
}

TEST(BoundTest, Instantiations) {
  const Rational lower = one_minus_inv_e_lower();
  EXPECT_LT(lower.get_d(), 1 - std::exp(-1.0));
  EXPECT_GT(lower.get_d(), 1 - std::exp(-1.0) - 1e-8);
  EXPECT_EQ(theorem4_bound(1, 1), lower / 2);
  EXPECT_NEAR(theorem4_bound_value(1, 1), 0.316, 1e-3);
  EXPECT_EQ(theorem4_bound(3, 3), lower / 18);
  EXPECT_EQ(theorem4_bound(4, 2), Rational(3, 16) * lower);
  EXPECT_EQ(theorem4_bound(1000000, 1), lower / 2);
  EXPECT_LT(theorem4_bound(1000000, 2), lower / 4);
  EXPECT_GT(theorem4_bound(1000000, 2), lower / 4 - Rational(1, 1000000));
  EXPECT_THROW(theorem4_bound(2, 3), PreconditionFailed);
}

TEST(GreedyInfluenceTest, SmallGraphs) {
  Instance line = profile({{0, 1}, {0, 1}, {0, 1}, {0, 1}});
  for (int i = 0; i < 3; ++i) line.graph.add_edge(i, i + 1);
  EXPECT_EQ(greedy_influence_max(line, 1), std::vector<NodeId>{0});
  EXPECT_EQ(greedy_influence_max(line, 4).size(), 4u);

  // Stars centered at 0 (five leaves) and 6 (three leaves).
  Instance stars = profile(std::vector<std::vector<int64_t>>(10, {0, 1}));
  for (int i = 1; i <= 5; ++i) stars.graph.add_edge(0, i);
  for (int i = 7; i <= 9; ++i) stars.graph.add_edge(6, i);
  auto picked = greedy_influence_max(stars, 2);
  std::sort(picked.begin(), picked.end());
  EXPECT_EQ(picked, (std::vector<NodeId>{0, 6}));
}

TEST(Theorem4Test, StarPicksTheCenter) {
  Instance star = profile(std::vector<std::vector<int64_t>>(10, {0, 1}));
  for (int i = 1; i <= 9; ++i) star.graph.add_edge(0, i);
  const SeedingPlan plan = greedy_ecs_theorem4(star, 1);
  ASSERT_EQ(plan.assignment.size(), 1u);
  EXPECT_EQ(plan.assignment.entries()[0].node, 0);
  EXPECT_EQ(plan.assignment.entries()[0].message, Message({1, 0}));
  EXPECT_EQ(plan.value.exact, 20);
  EXPECT_EQ(brute_force_ecs(star, 1).value.exact, 20);
}

TEST(Theorem4Test, BudgetRegimes) {
  const Instance in = example1_clique();
  EXPECT_THROW(greedy_ecs_theorem4(in, 3), HardToManipulate);
  EXPECT_TRUE(greedy_ecs_theorem4(in, 0).assignment.empty());
  const SeedingPlan plan = greedy_ecs_theorem4(in, 4);
  EXPECT_EQ(plan.assignment.size(), 1u);
  EXPECT_LE(plan.assignment.cost(), 4);
}

TEST(GreedyFamilyTest, PicksTheFlippingSeedFirst) {
  // Voter 1 is one unit from c0; nobody else can be moved within budget 1.
  Instance in = profile({{0, 5}, {1, 2}, {0, 7}});
  std::vector<Augmentation> trace;
  const SeedingPlan plan =
      greedy_family(in, 1, single_candidate_alphabet(2, 2), default_selection_rule(), {},
                    &trace);
  ASSERT_EQ(trace.size(), 1u);
  EXPECT_EQ(trace[0].node, 1);
  EXPECT_EQ(plan.value.exact, 2);
}

TEST(GreedyFamilyTest, TrapInstances) {
  const Instance p1 = prop1_greedy_trap();
  const SeedingPlan g1 = greedy_family(p1, 2, single_candidate_alphabet(3, 2));
  EXPECT_TRUE(g1.assignment.empty());
  EXPECT_EQ(g1.value.exact, 0);
  EXPECT_TRUE(augmentations(p1, SeedAssignment(), 2, bounded_alphabet(3, 2)).empty());

  const Instance p2 = prop2_tree_trap(3);
  EXPECT_EQ(greedy_family(p2, 2, single_candidate_alphabet(3, 2)).value.exact, 2);
}

TEST(BruteForceEcsTest, TrapOptima) {
  const Instance p1 = prop1_greedy_trap();
  EXPECT_EQ(brute_force_ecs(p1, 2).value.exact, 1);
  EXPECT_EQ(delta_mov_seeding(p1, prop1_optimal_plan(), {}).exact, 1);
  const Instance p2 = prop2_tree_trap(3);
  EXPECT_EQ(brute_force_ecs(p2, 2).value.exact, 3);
  EXPECT_TRUE(brute_force_ecs(p2, 0).assignment.empty());
}

TEST(BruteForceEcsTest, MatchesTheOracleOnRandomInstances) {
  Rng rng = derive_rng(31, 0);
  RandomInstanceParams params;
  params.max_nodes = 4;
  params.candidates = {2, 3};
  params.max_random_edges = 2;
  for (int t = 0; t < 25; ++t) {
    const Instance in = random_instance(rng, params);
    const int64_t b = std::uniform_int_distribution<int64_t>(0, 2)(rng);
    const auto alphabet = bounded_alphabet(in.candidate_count(), b);
    const SeedingPlan plan = brute_force_ecs(in, b, alphabet);
    EXPECT_EQ(plan.value.exact, oracle::best_seeding(in, b, alphabet));
    EXPECT_LE(plan.assignment.cost(), b);
  }
}

TEST(BruteForceEcsTest, RefusesOversizedSearches) {
  const Instance p2 = prop2_tree_trap(3);
  SolverConfig cfg;
  cfg.search_cap = 1000;
  EXPECT_THROW(brute_force_ecs(p2, 2, cfg), CapExceeded);
  EXPECT_GT(ecs_search_size(57, bounded_alphabet(3, 2), 2), 1000u);
}

TEST(SearchSizeTest, CountsPlans) {
  // Budget 1 over two candidates: four unit messages, so 1 + 4n plans.
  EXPECT_EQ(ecs_search_size(5, bounded_alphabet(2, 1), 1), 21u);
  EXPECT_EQ(ecs_search_size(5, bounded_alphabet(2, 1), 0), 1u);
}

}  // namespace
}  // namespace votectl
