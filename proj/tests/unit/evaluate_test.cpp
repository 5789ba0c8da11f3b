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
#include "votectl/diffusion.hpp"
#include "votectl/errors.hpp"
#include "votectl/evaluate.hpp"
#include "votectl/gadgets.hpp"
#include "votectl/random_instances.hpp"
#include "votectl/sources.hpp"

namespace votectl {
namespace {

EvalConfig exact() { return EvalConfig{}; }

EvalConfig monte_carlo(int64_t samples, uint64_t seed, int workers = 1) {
  EvalConfig c;
  c.mode = Mode::kMonteCarlo;
  c.samples = samples;
  c.seed = seed;
  c.workers = workers;
  return c;
}

std::vector<int64_t> sorted_values(const std::vector<LiveTerm>& terms) {
  std::vector<int64_t> v;
  for (const auto& t : terms) v.push_back(t.value);
  std::sort(v.begin(), v.end());
  return v;
}

TEST(EvaluateTest, Example2ExactAndSampled) {
  const Instance in = example2_diamond();
  std::vector<LiveTerm> terms;
  const Evaluation e = expected_mov(in, *in.baseline, {}, exact(), &terms);
  EXPECT_EQ(e.mode, Mode::kExact);
  EXPECT_EQ(e.exact, 1);
  EXPECT_EQ(e.value_string(), "1/1");
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].probability, Rational(1, 2));
  EXPECT_EQ(sorted_values(terms), (std::vector<int64_t>{0, 2}));

  const Evaluation mc = expected_mov(in, *in.baseline, {}, monte_carlo(100000, 4));
  EXPECT_EQ(mc.samples, 100000);
  EXPECT_LE(std::abs(mc.estimate - 1.0), 3 * mc.std_error);
}

TEST(EvaluateTest, SamplingIsIndependentOfWorkerCount) {
  const Instance in = partition_line({{1, 1, 2, 2}, 2});
  const SeedAssignment plan = partition_seeding({{1, 1, 2, 2}, 2}, {0, 1});
  const Evaluation one = expected_mov(in, plan, {}, monte_carlo(5000, 8, 1));
  const Evaluation four = expected_mov(in, plan, {}, monte_carlo(5000, 8, 4));
  EXPECT_EQ(one.estimate, four.estimate);
  EXPECT_EQ(one.std_error, four.std_error);
}

TEST(EvaluateTest, ExactModeRefusesTooManyRandomEdges) {
  Instance in;
  in.scores = ScoreProfile(0, 2);
  for (int i = 0; i < 8; ++i) in.scores.push_row(std::vector<int64_t>{0, 1});
  in.graph.node_count = 8;
  for (int i = 0; i + 1 < 8; ++i) in.graph.add_edge(i, i + 1, Rational(1, 2));
  SeedAssignment a;
  a.add(0, Message({2, 0}));
  EvalConfig c;
  c.enumeration_cap = 5;
  EXPECT_THROW(expected_mov(in, a, {}, c), CapExceeded);
  c.monte_carlo_fallback = true;
  EXPECT_EQ(expected_mov(in, a, {}, c).mode, Mode::kMonteCarlo);
}

TEST(EvaluateTest, AgreesWithTheOracleOnRandomInstances) {
  Rng rng = derive_rng(21, 0);
  for (int t = 0; t < 150; ++t) {
    const Instance in = random_instance(rng, RandomInstanceParams{});
    const SeedAssignment a = random_assignment(rng, in, 3, 2);
    EXPECT_EQ(expected_mov(in, a, {}, exact()).exact,
              oracle::expected_mov(in, in.graph.edges, a));
    EXPECT_EQ(delta_mov_seeding(in, a, exact()).exact,
              oracle::expected_mov(in, in.graph.edges, a) -
                  oracle::expected_mov(in, in.graph.edges, SeedAssignment()));
    const auto nodes = a.nodes();
    EXPECT_EQ(expected_influence(in, nodes, {}, exact()).exact,
              oracle::expected_influence(in, in.graph.edges, nodes));
  }
}

TEST(EvaluateTest, CoupledDifferencesMatchTwoIndependentExpectations) {
  Rng rng = derive_rng(22, 0);
  for (int t = 0; t < 100; ++t) {
    const Instance in = random_single_article_instance(rng, 7, 9, 5);
    std::vector<EdgeKey> removals;
    for (const auto& e : in.graph.edges) {
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) removals.push_back(e.key());
    }
    std::vector<EdgeKey> additions;
    for (const auto& e : in.graph.addable_edges()) {
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) additions.push_back(e.key());
    }
    const SeedAssignment& s = *in.baseline;
    const Rational before = expected_mov(in, s, {}, exact()).exact;
    EXPECT_EQ(delta_mov_edge_removal(in, removals, exact()).exact,
              expected_mov(in, s, EdgeDelta::removal(removals), exact()).exact - before);
    EXPECT_EQ(delta_mov_edge_addition(in, additions, exact()).exact,
              expected_mov(in, s, EdgeDelta::addition(additions), exact()).exact -
                  before);
    EXPECT_EQ(expected_mov(in, s, EdgeDelta::addition(additions), exact()).exact,
              oracle::expected_mov(
                  in, apply_edge_delta(in, EdgeDelta::addition(additions)), s));
  }
}

TEST(EvaluateTest, TrivialDeltas) {
  const Instance in = example2_diamond();
  EXPECT_EQ(delta_mov_seeding(prop1_greedy_trap(), SeedAssignment(), exact()).exact, 0);
  EXPECT_EQ(delta_mov_edge_removal(in, {}, exact()).exact, 0);
  EXPECT_EQ(delta_mov_edge_addition(in, {}, exact()).exact, 0);
  EXPECT_EQ(delta_influence_addition(in, {}, exact()).exact, 0);
}

TEST(EvaluateTest, RemovingAnEdgeNoMessageCrossesChangesNothing) {
  Instance in;
  in.scores = ScoreProfile(0, 2);
  for (int i = 0; i < 3; ++i) in.scores.push_row(std::vector<int64_t>{0, 1});
  in.graph.node_count = 3;
  in.graph.add_edge(0, 1);
  in.graph.add_edge(2, 1, Rational(1, 2));
  in.baseline = SeedAssignment();
  in.baseline->add(0, Message({2, 0}));
  const std::vector<EdgeKey> unused{{2, 1}};
  EXPECT_EQ(delta_mov_edge_removal(in, unused, exact()).exact, 0);
  const std::vector<EdgeKey> used{{0, 1}};
  EXPECT_EQ(delta_mov_edge_removal(in, used, exact()).exact, -2);
}

TEST(EvaluateTest, RemovingEveryEdgeLeavesOnlyTheSeeds) {
  const Instance in = msi_imer({3, {{1, 2}, {2, 3}, {1, 3}}, 2}, 2);
  std::vector<EdgeKey> all;
  for (const auto& e : in.graph.edges) all.push_back(e.key());
  const auto seeds = in.baseline->nodes();
  const Rational chi_e = expected_influence(in, seeds, {}, exact()).exact;
  EXPECT_EQ(delta_influence_removal(in, all, exact()).exact,
            chi_e - static_cast<int64_t>(seeds.size()));
}

TEST(GadgetValueTest, SetCoverSeedingWitness) {
  const SetCover sc{3, {{1, 2}, {2, 3}, {1, 3}}, 2};
  const Instance in = setcover_ecs(sc);
  const int64_t g = sc.g(), n = sc.n;
  const auto votes = oracle::votes(
      in, oracle::worlds(in.node_count(), in.graph.edges).front(), SeedAssignment());
  EXPECT_EQ(votes, (std::vector<int64_t>{g + n + 2, g + n + 2, g + n}));
  EXPECT_EQ(delta_mov_seeding(in, setcover_ecs_witness(sc, {0, 1}), exact()).exact, 1);
}

TEST(GadgetValueTest, SetCoverRemovalWitnessPerLiveGraph) {
  const SetCover sc{3, {{1, 2}, {2, 3}}, 2};
  const Instance in = setcover_ecer(sc);
  std::vector<LiveTerm> terms;
  const auto e = delta_mov_edge_removal(in, setcover_ecer_witness(sc, {0, 1}), exact(),
                                        &terms);
  EXPECT_EQ(e.exact, 1);
  EXPECT_EQ(sorted_values(terms), (std::vector<int64_t>{-16, 18}));
}

TEST(GadgetValueTest, SetCoverAdditionWitnesses) {
  const SetCover sc{3, {{1, 2}, {2, 3}}, 2};
  const Instance single = setcover_ecea_single(sc);
  EXPECT_EQ(delta_mov_edge_addition(single, setcover_ecea_single_witness(sc, {0, 1}),
                                    exact())
                .exact,
            1);
  const Instance multi = setcover_ecea_multi(sc);
  std::vector<LiveTerm> terms;
  EXPECT_EQ(delta_mov_edge_addition(multi, setcover_ecea_multi_witness(sc, {0, 1}),
                                    exact(), &terms)
                .exact,
            1);
  EXPECT_EQ(sorted_values(terms), (std::vector<int64_t>{-16, 18}));
}

TEST(GadgetValueTest, MsiRemovalWitness) {
  const MsiInput m{3, {{1, 2}, {2, 3}, {1, 3}}, 2};
  const int32_t r = 4;
  const Instance in = msi_imer(m, r);
  const auto chosen = find_msi(m);
  EXPECT_EQ(delta_influence_removal(in, msi_imer_witness(m, chosen), exact()).exact,
            m.g() - m.h + msi_opt(m) * r);
}

}  // namespace
}  // namespace votectl
