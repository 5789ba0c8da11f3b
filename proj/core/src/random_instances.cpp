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

#include "votectl/random_instances.hpp"

#include <algorithm>
#include <numeric>

#include "votectl/seedctl.hpp"

namespace votectl {

namespace {

int64_t uniform(Rng& rng, int64_t lo, int64_t hi) {
  return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<int64_t> distinct_row(Rng& rng, int32_t c, int64_t range) {
  std::vector<int64_t> pool(range + 1);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  return {pool.begin(), pool.begin() + c};
}

}  // namespace

Instance random_instance(Rng& rng, const RandomInstanceParams& params) {
  Instance inst;
  inst.name = "random";
  const int32_t n = static_cast<int32_t>(uniform(rng, params.min_nodes, params.max_nodes));
  const int32_t c = params.candidates[uniform(rng, 0, params.candidates.size() - 1)];
  inst.graph.node_count = n;
  inst.scores = ScoreProfile(n, c);
  const int64_t range = std::max<int64_t>(params.score_range, c - 1);
  for (NodeId v = 0; v < n; ++v) inst.scores.set_row(v, distinct_row(rng, c, range));
  int32_t random_edges = 0;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v || !coin(rng, params.edge_density)) continue;
      Rational p = 1;
      if (random_edges < params.max_random_edges && !params.probabilities.empty() &&
          coin(rng, 0.5)) {
        p = params.probabilities[uniform(rng, 0, params.probabilities.size() - 1)];
        ++random_edges;
      }
      inst.graph.add_edge(u, v, p);
    }
  }
  return inst;
}

SeedAssignment random_assignment(Rng& rng, const Instance& instance,
                                 int32_t max_seeds, int64_t max_magnitude) {
  const int32_t n = instance.node_count();
  const int32_t c = instance.candidate_count();
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  const int32_t k = static_cast<int32_t>(uniform(rng, 0, std::min(max_seeds, n)));
  SeedAssignment a;
  for (int32_t i = 0; i < k; ++i) {
    std::vector<int64_t> news(c, 0);
    const int64_t mag = uniform(rng, 1, max_magnitude);
    for (int64_t j = 0; j < mag; ++j) news[uniform(rng, 0, c - 1)] += coin(rng, 0.5) ? 1 : -1;
    if (std::all_of(news.begin(), news.end(), [](int64_t q) { return q == 0; })) {
      news[uniform(rng, 0, c - 1)] = 1;
    }
    a.add(nodes[i], Message(std::move(news)));
  }
  return a;
}

BudgetedInstance random_theorem4_case(Rng& rng, uint64_t search_cap) {
  RandomInstanceParams params;
  while (true) {
    Instance inst = random_instance(rng, params);
    const int64_t d = delta(inst);
    if (d < 1 || d > 4) continue;
    const int64_t budget = uniform(rng, d, 4);
    const auto alphabet = bounded_alphabet(inst.candidate_count(), budget);
    if (ecs_search_size(inst.node_count(), alphabet, budget) > search_cap) continue;
    inst.name = "theorem4-random";
    return {std::move(inst), budget};
  }
}

Instance random_single_article_instance(Rng& rng, int32_t max_nodes,
                                        int32_t max_edges,
                                        int32_t max_addable) {
  RandomInstanceParams params;
  params.max_nodes = max_nodes;
  params.candidates = {2};
  Instance inst = random_instance(rng, params);
  inst.name = "single-article-random";
  std::shuffle(inst.graph.edges.begin(), inst.graph.edges.end(), rng);
  if (static_cast<int32_t>(inst.graph.edges.size()) > max_edges) {
    inst.graph.edges.resize(max_edges);
  }
  std::sort(inst.graph.edges.begin(), inst.graph.edges.end(),
            [](const Edge& a, const Edge& b) { return a.key() < b.key(); });
  std::vector<Edge> catalog;
  for (const Edge& e : inst.graph.addable_edges()) {
    Edge a = e;
    if (coin(rng, 0.5)) a.p = params.probabilities[uniform(rng, 0, params.probabilities.size() - 1)];
    catalog.push_back(std::move(a));
  }
  std::shuffle(catalog.begin(), catalog.end(), rng);
  if (static_cast<int32_t>(catalog.size()) > max_addable) catalog.resize(max_addable);
  std::sort(catalog.begin(), catalog.end(),
            [](const Edge& a, const Edge& b) { return a.key() < b.key(); });
  inst.graph.addable = std::move(catalog);
  static const std::vector<std::vector<int64_t>> kMessages{
      {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  const auto& news = kMessages[uniform(rng, 0, 3)];
  std::vector<NodeId> nodes(inst.node_count());
  std::iota(nodes.begin(), nodes.end(), 0);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  const int64_t k = uniform(rng, 1, std::min<int64_t>(3, inst.node_count()));
  inst.baseline = SeedAssignment();
  for (int64_t i = 0; i < k; ++i) inst.baseline->add(nodes[i], Message(news));
  return inst;
}

SimpleGraph random_graph(Rng& rng, int32_t n, double density) {
  SimpleGraph g;
  g.n = n;
  for (int32_t u = 0; u < n; ++u) {
    for (int32_t v = u + 1; v < n; ++v) {
      if (coin(rng, density)) g.edges.push_back({u, v});
    }
  }
  return g;
}

}  // namespace votectl
