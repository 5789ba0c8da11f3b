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
#include "votectl/diffusion.hpp"
#include "votectl/errors.hpp"
#include "votectl/gadgets.hpp"
#include "votectl/random_instances.hpp"

namespace votectl {
namespace {

constexpr NodeId kA = 0, kB = 1, kC = 2, kD = 3, kE = 4;

LiveGraph live_of(std::vector<EdgeKey> keys) {
  std::sort(keys.begin(), keys.end());
  return LiveGraph{std::move(keys), std::nullopt};
}

Instance line(int32_t n, Rational p = 1) {
  Instance in;
  in.scores = ScoreProfile(0, 2);
  for (int32_t i = 0; i < n; ++i) in.scores.push_row(std::vector<int64_t>{0, 1});
  in.graph.node_count = n;
  for (int32_t i = 0; i + 1 < n; ++i) in.graph.add_edge(i, i + 1, p);
  return in;
}

TEST(LiveGraphTest, EnumerationFollowsTheProductLaw) {
  Instance in = line(3);
  in.graph.edges[0].p = Rational(1, 3);
  in.graph.edges[1].p = Rational(1, 2);
  const auto all = enumerate_live_graphs(in, in.graph.edges);
  ASSERT_EQ(all.size(), 4u);
  std::vector<Rational> w;
  Rational sum = 0;
  for (const auto& g : all) {
    w.push_back(*g.probability);
    sum += *g.probability;
  }
  std::sort(w.begin(), w.end());
  EXPECT_EQ(w, (std::vector<Rational>{Rational(1, 6), Rational(1, 6),
                                      Rational(1, 3), Rational(1, 3)}));
  EXPECT_EQ(sum, 1);
}

TEST(LiveGraphTest, DeterministicEdgesFoldIntoOneGraph) {
  const Instance in = line(4);
  const auto all = enumerate_live_graphs(in, in.graph.edges);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].active.size(), 3u);
  EXPECT_EQ(*all[0].probability, 1);
}

TEST(LiveGraphTest, EnumerationCapIsEnforced) {
  const Instance in = line(6, Rational(1, 2));
  EXPECT_THROW(enumerate_live_graphs(in, in.graph.edges, 4), CapExceeded);
  EXPECT_EQ(enumerate_live_graphs(in, in.graph.edges, 5).size(), 32u);
}

TEST(LiveGraphTest, SamplingExtremesAndFrequency) {
  Instance in = line(3);
  Rng rng = derive_rng(5, 0);
  EXPECT_EQ(sample_live_graph(in, in.graph.edges, rng).active.size(), 2u);
  for (auto& e : in.graph.edges) e.p = 0;
  EXPECT_TRUE(sample_live_graph(in, in.graph.edges, rng).active.empty());

  const Instance half = line(2, Rational(1, 2));
  int hits = 0;
  for (int i = 0; i < 10000; ++i) {
    hits += !sample_live_graph(half, half.graph.edges, rng).active.empty();
  }
  EXPECT_NEAR(hits / 10000.0, 0.5, 0.02);
}

TEST(InfluenceTest, ReachabilityIncludesTheSeed) {
  const Instance in = line(3);
  SeedAssignment a;
  a.add(0, Message({1, 0}));
  EXPECT_EQ(influenced_sets(in, live_of({}), a).per_seed[0], std::vector<NodeId>{0});
  EXPECT_EQ(influenced_sets(in, live_of({{0, 1}, {1, 2}}), a).per_seed[0],
            (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(chi(in, live_of({}), SeedAssignment()), 0);
  EXPECT_EQ(chi(in, live_of({}), a), 1);
}

TEST(InfluenceTest, ChiCountsTheUnion) {
  Instance in = line(5);
  in.graph.edges.clear();
  SeedAssignment a;
  a.add(0, Message({1, 0}));
  a.add(4, Message({1, 0}));
  // 0 reaches {0,1,2}; 4 reaches {4,1,2}.
  const LiveGraph g = live_of({{0, 1}, {1, 2}, {4, 1}});
  EXPECT_EQ(chi(in, g, a), 4);
}

TEST(InfluenceTest, Example2SeedBReachesCAndDUnderH2) {
  const Instance in = example2_diamond();
  const LiveGraph h2 = live_of({{kA, kC}, {kB, kC}, {kC, kD}, {kE, kD}});
  const auto sets = influenced_sets(in, h2, *in.baseline);
  EXPECT_EQ(sets.per_seed[1], (std::vector<NodeId>{kB, kC, kD}));
}

TEST(ReviseTest, Example2VoterD) {
  const Instance in = example2_diamond();
  const Rational eps = epsilon(in);
  const LiveGraph h1 = live_of({{kA, kC}, {kC, kD}, {kE, kD}});
  const LiveGraph h2 = live_of({{kA, kC}, {kB, kC}, {kC, kD}, {kE, kD}});

  const FinalScores s1 = revise_scores(in, *in.baseline, h1);
  EXPECT_EQ(s1.at(kD, 0), 1);
  EXPECT_EQ(s1.at(kD, 1), 2 - eps);
  EXPECT_EQ(s1.at(kD, 2), 2 - 2 * eps);
  const FinalScores s2 = revise_scores(in, *in.baseline, h2);
  EXPECT_EQ(s2.at(kD, 0), 2);
  EXPECT_EQ(s2.at(kD, 1), 2 - eps);
  EXPECT_EQ(s2.at(kD, 2), 2 - 2 * eps);

  const Tally t1 = tally(s1);
  const Tally t2 = tally(s2);
  EXPECT_EQ(t1.votes, (std::vector<int64_t>{2, 2, 1}));
  EXPECT_EQ(t1.mov, 0);
  EXPECT_EQ(t2.votes, (std::vector<int64_t>{3, 1, 1}));
  EXPECT_EQ(t2.mov, 2);
  // C keeps preferring c2 in both graphs.
  for (const FinalScores* s : {&s1, &s2}) {
    EXPECT_GT(s->at(kC, 2), s->at(kC, 0));
    EXPECT_GT(s->at(kC, 2), s->at(kC, 1));
  }
}

TEST(ReviseTest, NoSeedsKeepsEveryFavorite) {
  Rng rng = derive_rng(9, 0);
  for (int t = 0; t < 30; ++t) {
    const Instance in = random_instance(rng, RandomInstanceParams{});
    const FinalScores s = revise_scores(in, SeedAssignment(), live_of({}));
    std::vector<int64_t> want(in.candidate_count(), 0);
    for (NodeId v = 0; v < in.node_count(); ++v) ++want[in.scores.favorite(v)];
    EXPECT_EQ(tally(s).votes, want);
  }
}

TEST(ReviseTest, MessagesAddUp) {
  Rng rng = derive_rng(10, 0);
  for (int t = 0; t < 30; ++t) {
    const Instance in = random_instance(rng, RandomInstanceParams{});
    const SeedAssignment a = random_assignment(rng, in, 2, 2);
    const SeedAssignment extra = random_assignment(rng, in, 2, 2);
    SeedAssignment b;
    for (const auto& e : extra.entries()) {
      if (!a.contains(e.node)) b.add(e.node, e.message);
    }
    SeedAssignment both = a;
    for (const auto& e : b.entries()) both.add(e.node, e.message);
    const LiveGraph g = sample_live_graph(in, in.graph.edges, rng);
    const auto ra = revise_scores(in, a, g).received;
    const auto rb = revise_scores(in, b, g).received;
    const auto rab = revise_scores(in, both, g).received;
    for (size_t i = 0; i < rab.size(); ++i) EXPECT_EQ(rab[i], ra[i] + rb[i]);
  }
}

TEST(ReviseTest, BribedSeedsVoteAsPinned) {
  Instance in = line(3);
  in.bribed_seeds = true;
  SeedAssignment a;
  a.add(0, Message({-1, 0}), 0);
  const Tally t = tally(revise_scores(in, a, live_of({{0, 1}, {1, 2}})));
  EXPECT_EQ(t.votes, (std::vector<int64_t>{1, 2}));
}

TEST(TallyTest, AllForCandidateZero) {
  Instance in = line(4);
  for (NodeId v = 0; v < 4; ++v) in.scores.set_row(v, std::vector<int64_t>{1, 0});
  const Tally t = tally(revise_scores(in, SeedAssignment(), live_of({})));
  EXPECT_EQ(t.mov, 4);
  EXPECT_EQ(margin_of_victory(std::vector<int64_t>{3, 5, 1}), -2);
}

TEST(TallyTest, AgreesWithTheOracleOnRandomInstances) {
  Rng rng = derive_rng(12, 0);
  for (int t = 0; t < 200; ++t) {
    const Instance in = random_instance(rng, RandomInstanceParams{});
    const SeedAssignment a = random_assignment(rng, in, 3, 2);
    for (const auto& g : enumerate_live_graphs(in, in.graph.edges)) {
      oracle::World w{1, std::vector<std::vector<NodeId>>(in.node_count())};
      for (const auto& e : g.active) w.out[e.src].push_back(e.dst);
      EXPECT_EQ(tally(revise_scores(in, a, g)).votes, oracle::votes(in, w, a));
    }
  }
}

TEST(ChiTest, MonotoneInTheLiveGraph) {
  Rng rng = derive_rng(13, 0);
  for (int t = 0; t < 200; ++t) {
    const Instance in = random_instance(rng, RandomInstanceParams{});
    const SeedAssignment a = random_assignment(rng, in, 3, 1);
    LiveGraph g = sample_live_graph(in, in.graph.edges, rng);
    const int64_t before = chi(in, g, a);
    for (const auto& e : in.graph.edges) {
      if (g.contains(e.key())) continue;
      g.active.push_back(e.key());
      std::sort(g.active.begin(), g.active.end());
      break;
    }
    EXPECT_GE(chi(in, g, a), before);
  }
}

}  // namespace
}  // namespace votectl
