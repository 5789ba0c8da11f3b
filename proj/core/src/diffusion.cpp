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

#include "votectl/diffusion.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "votectl/errors.hpp"

namespace votectl {

namespace {

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Adjacency lists of a live graph.
std::vector<std::vector<NodeId>> adjacency(int32_t n, const LiveGraph& live) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const EdgeKey& e : live.active) adj[e.src].push_back(e.dst);
  return adj;
}

std::vector<NodeId> reachable(const std::vector<std::vector<NodeId>>& adj,
                              NodeId s) {
  std::vector<uint8_t> seen(adj.size(), 0);
  std::vector<NodeId> order{s};
  seen[s] = 1;
  for (size_t head = 0; head < order.size(); ++head) {
    for (NodeId w : adj[order[head]]) {
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

void check_seeds(const Instance& instance, const SeedAssignment& assignment) {
  for (const auto& e : assignment.entries()) {
    if (e.node < 0 || e.node >= instance.node_count()) {
      throw InvalidInput("seed " + std::to_string(e.node) + " out of range");
    }
    if (static_cast<int32_t>(e.message.news.size()) !=
        instance.candidate_count()) {
      throw InvalidInput("message length does not match candidate count");
    }
  }
}

}  // namespace

Rng derive_rng(uint64_t master_seed, uint64_t stream) {
  uint64_t x = mix64(master_seed + 0x9E3779B97F4A7C15ull);
  x = mix64(x ^ (stream * 0xD1B54A32D192ED03ull + 0x8CB92BA72F3D8DD7ull));
  return Rng(x);
}

bool draw_bernoulli(Rng& rng, const Rational& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  const mpz_class& num = p.get_num();
  const mpz_class& den = p.get_den();
  if (den.fits_ulong_p()) {
    const uint64_t b = den.get_ui();
    const uint64_t a = num.get_ui();
    // Reject the top partial block so every residue is equally likely.
    const uint64_t limit =
        std::numeric_limits<uint64_t>::max() -
        (std::numeric_limits<uint64_t>::max() % b + 1) % b;
    uint64_t u = rng();
    while (u > limit) u = rng();
    return u % b < a;
  }
  // Denominators beyond 64 bits: 53-bit uniform against the rounded value.
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return u < p.get_d();
}

std::vector<Edge> apply_edge_delta(const Instance& instance,
                                   const EdgeDelta& delta) {
  std::set<EdgeKey> removals(delta.removals.begin(), delta.removals.end());
  if (removals.size() != delta.removals.size()) {
    throw InvalidInput("duplicate edge in removal set");
  }
  std::vector<Edge> out;
  size_t removed = 0;
  std::set<EdgeKey> existing;
  for (const Edge& e : instance.graph.edges) {
    existing.insert(e.key());
    if (removals.count(e.key())) {
      ++removed;
    } else {
      out.push_back(e);
    }
  }
  if (removed != removals.size()) {
    throw InvalidInput("removal set contains an edge outside E");
  }
  if (delta.additions.empty()) return out;
  std::map<EdgeKey, Rational> catalog;
  for (const Edge& e : instance.graph.addable_edges()) catalog[e.key()] = e.p;
  std::vector<EdgeKey> additions = delta.additions;
  std::sort(additions.begin(), additions.end());
  if (std::adjacent_find(additions.begin(), additions.end()) !=
      additions.end()) {
    throw InvalidInput("duplicate edge in addition set");
  }
  for (const EdgeKey& k : additions) {
    auto it = catalog.find(k);
    if (it == catalog.end() || existing.count(k)) {
      throw InvalidInput("addition (" + std::to_string(k.src) + "," +
                         std::to_string(k.dst) + ") is not addable");
    }
    out.push_back({k.src, k.dst, it->second});
  }
  return out;
}

bool LiveGraph::contains(EdgeKey e) const {
  return std::binary_search(active.begin(), active.end(), e);
}

LiveGraph sample_live_graph(const Instance& instance,
                            std::span<const Edge> edge_set, Rng& rng) {
  (void)instance;
  LiveGraph live;
  for (const Edge& e : edge_set) {
    if (e.p >= 1 || (e.p > 0 && draw_bernoulli(rng, e.p))) {
      live.active.push_back(e.key());
    }
  }
  std::sort(live.active.begin(), live.active.end());
  return live;
}

std::vector<LiveGraph> enumerate_live_graphs(const Instance& instance,
                                             std::span<const Edge> edge_set,
                                             int enumeration_cap) {
  (void)instance;
  std::vector<const Edge*> random;
  std::vector<EdgeKey> certain;
  for (const Edge& e : edge_set) {
    if (e.p >= 1) {
      certain.push_back(e.key());
    } else if (e.p > 0) {
      random.push_back(&e);
    }
  }
  const int r = static_cast<int>(random.size());
  if (r > enumeration_cap || r > 40) {
    throw CapExceeded("exact enumeration over " + std::to_string(r) +
                          " random edges; use Monte Carlo mode",
                      r, enumeration_cap);
  }
  std::vector<LiveGraph> out;
  const size_t count = static_cast<size_t>(1) << r;
  out.reserve(count);
  for (size_t k = 0; k < count; ++k) {
    LiveGraph g;
    g.active = certain;
    Rational prob = 1;
    for (int j = 0; j < r; ++j) {
      if ((k >> j) & 1) {
        g.active.push_back(random[j]->key());
        prob *= random[j]->p;
      } else {
        prob *= 1 - random[j]->p;
      }
    }
    std::sort(g.active.begin(), g.active.end());
    g.probability = prob;
    out.push_back(std::move(g));
  }
  return out;
}

InfluencedSets influenced_sets(const Instance& instance,
                               const LiveGraph& live,
                               const SeedAssignment& assignment) {
  check_seeds(instance, assignment);
  auto adj = adjacency(instance.node_count(), live);
  InfluencedSets out;
  std::set<NodeId> all;
  for (const auto& e : assignment.entries()) {
    out.per_seed.push_back(reachable(adj, e.node));
    all.insert(out.per_seed.back().begin(), out.per_seed.back().end());
  }
  out.all.assign(all.begin(), all.end());
  return out;
}

FinalScores revise_scores(const Instance& instance,
                          const SeedAssignment& assignment,
                          const LiveGraph& live) {
  const int32_t n = instance.node_count();
  const int32_t c = instance.candidate_count();
  auto sets = influenced_sets(instance, live, assignment);
  FinalScores out;
  out.candidates = c;
  out.received.assign(static_cast<size_t>(n) * c, 0);
  out.pinned.assign(n, -1);
  const auto& entries = assignment.entries();
  for (size_t i = 0; i < entries.size(); ++i) {
    for (NodeId v : sets.per_seed[i]) {
      for (CandidateId j = 0; j < c; ++j) {
        out.received[static_cast<size_t>(v) * c + j] +=
            entries[i].message.news[j];
      }
    }
    if (instance.bribed_seeds) out.pinned[entries[i].node] = entries[i].bribed_for;
  }
  const Rational keep = 1 - epsilon(instance);
  out.scores.resize(static_cast<size_t>(n) * c);
  for (NodeId v = 0; v < n; ++v) {
    for (CandidateId j = 0; j < c; ++j) {
      size_t at = static_cast<size_t>(v) * c + j;
      out.scores[at] = keep * instance.scores.at(v, j) + out.received[at];
    }
  }
  return out;
}

int64_t margin_of_victory(std::span<const int64_t> votes) {
  int64_t best_other = std::numeric_limits<int64_t>::min();
  for (size_t i = 1; i < votes.size(); ++i) {
    best_other = std::max(best_other, votes[i]);
  }
  return votes[0] - best_other;
}

Tally tally(const FinalScores& scores) {
  const int32_t c = scores.candidates;
  const size_t n = c == 0 ? 0 : scores.scores.size() / c;
  Tally t;
  t.votes.assign(c, 0);
  for (size_t v = 0; v < n; ++v) {
    if (!scores.pinned.empty() && scores.pinned[v] >= 0) {
      ++t.votes[scores.pinned[v]];
      continue;
    }
    CandidateId best = 0;
    bool tie = false;
    for (CandidateId j = 1; j < c; ++j) {
      int order = cmp(scores.at(v, j), scores.at(v, best));
      if (order > 0) {
        best = j;
        tie = false;
      } else if (order == 0) {
        tie = true;
      }
    }
    if (tie) {
      throw InternalError("tie in revised scores of voter " +
                          std::to_string(v));
    }
    ++t.votes[best];
  }
  t.winner = static_cast<CandidateId>(
      std::max_element(t.votes.begin(), t.votes.end()) - t.votes.begin());
  t.mov = margin_of_victory(t.votes);
  return t;
}

int64_t chi(const Instance& instance, const LiveGraph& live,
            const SeedAssignment& assignment) {
  return static_cast<int64_t>(
      influenced_sets(instance, live, assignment).all.size());
}

}  // namespace votectl
