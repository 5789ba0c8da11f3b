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

// Test-only oracles. Everything here is written from the model definitions
// with plain loops and rationals, so it shares nothing with the library's
// engine beyond the Instance type.

#ifndef VOTECTL_TESTS_ORACLE_HPP_
#define VOTECTL_TESTS_ORACLE_HPP_

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "votectl/model.hpp"

namespace oracle {

using votectl::Edge;
using votectl::Instance;
using votectl::Message;
using votectl::NodeId;
using votectl::Rational;
using votectl::SeedAssignment;

struct World {
  Rational p;
  std::vector<std::vector<NodeId>> out;
};

inline std::vector<World> worlds(int32_t n, const std::vector<Edge>& edges) {
  std::vector<World> acc{{Rational(1), std::vector<std::vector<NodeId>>(n)}};
  for (const Edge& e : edges) {
    std::vector<World> next;
    for (const World& w : acc) {
      if (e.p != 0) {
        World on = w;
        on.p *= e.p;
        on.out[e.src].push_back(e.dst);
        next.push_back(std::move(on));
      }
      if (e.p != 1) {
        World off = w;
        off.p *= 1 - e.p;
        next.push_back(std::move(off));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

inline std::vector<bool> reach(const World& w, NodeId s) {
  std::vector<bool> seen(w.out.size(), false);
  std::vector<NodeId> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v : w.out[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

// Votes per candidate in one world. Throws on a tie.
inline std::vector<int64_t> votes(const Instance& in, const World& w,
                                  const SeedAssignment& a) {
  const int32_t n = in.node_count();
  const int32_t c = in.candidate_count();
  int64_t top = 0;
  for (NodeId v = 0; v < n; ++v) {
    for (int32_t i = 0; i < c; ++i) top = std::max(top, in.scores.at(v, i));
  }
  const Rational scale = Rational(top, top + 1);
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(c));
  for (NodeId v = 0; v < n; ++v) {
    for (int32_t i = 0; i < c; ++i) s[v][i] = scale * in.scores.at(v, i);
  }
  std::vector<int32_t> pinned(n, -1);
  for (const auto& e : a.entries()) {
    const auto r = reach(w, e.node);
    for (NodeId v = 0; v < n; ++v) {
      if (!r[v]) continue;
      for (int32_t i = 0; i < c; ++i) s[v][i] += e.message.news[i];
    }
    if (in.bribed_seeds) pinned[e.node] = e.bribed_for;
  }
  std::vector<int64_t> out(c, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (pinned[v] >= 0) {
      ++out[pinned[v]];
      continue;
    }
    const Rational best = *std::max_element(s[v].begin(), s[v].end());
    if (std::count(s[v].begin(), s[v].end(), best) != 1) {
      throw std::logic_error("tie in oracle");
    }
    ++out[std::find(s[v].begin(), s[v].end(), best) - s[v].begin()];
  }
  return out;
}

inline int64_t mov(const std::vector<int64_t>& v) {
  return v[0] - *std::max_element(v.begin() + 1, v.end());
}

inline Rational expected_mov(const Instance& in, const std::vector<Edge>& edges,
                             const SeedAssignment& a) {
  Rational sum = 0;
  for (const World& w : worlds(in.node_count(), edges)) {
    sum += w.p * mov(votes(in, w, a));
  }
  return sum;
}

inline Rational expected_influence(const Instance& in,
                                   const std::vector<Edge>& edges,
                                   const std::vector<NodeId>& seeds) {
  Rational sum = 0;
  for (const World& w : worlds(in.node_count(), edges)) {
    std::vector<bool> any(in.node_count(), false);
    for (NodeId s : seeds) {
      const auto r = reach(w, s);
      for (size_t v = 0; v < r.size(); ++v) any[v] = any[v] || r[v];
    }
    sum += w.p * static_cast<int64_t>(std::count(any.begin(), any.end(), true));
  }
  return sum;
}

inline int64_t cost(const Message& m) {
  int64_t c = 0;
  for (int64_t q : m.news) c += q < 0 ? -q : q;
  return c;
}

// Best expected MoV gain over every plan that gives each node at most one
// message from the alphabet, within the budget.
inline Rational best_seeding(const Instance& in, int64_t budget,
                             const std::vector<Message>& alphabet) {
  const Rational base = expected_mov(in, in.graph.edges, SeedAssignment());
  Rational best = 0;
  SeedAssignment plan;
  std::function<void(NodeId, int64_t)> go = [&](NodeId v, int64_t left) {
    if (v == in.node_count()) {
      best = std::max<Rational>(best, expected_mov(in, in.graph.edges, plan) - base);
      return;
    }
    go(v + 1, left);
    for (const Message& m : alphabet) {
      if (cost(m) > left) continue;
      auto saved = plan;
      plan.add(v, m);
      go(v + 1, left - cost(m));
      plan = saved;
    }
  };
  go(0, budget);
  return best;
}

enum class Goal { kMov, kInfluence };

inline std::vector<NodeId> seed_nodes(const Instance& in) {
  std::vector<NodeId> out;
  for (const auto& e : in.baseline->entries()) out.push_back(e.node);
  return out;
}

inline Rational edge_objective(const Instance& in, const std::vector<Edge>& edges,
                               Goal goal) {
  return goal == Goal::kMov ? expected_mov(in, edges, *in.baseline)
                            : expected_influence(in, edges, seed_nodes(in));
}

// Best gain over removal subsets of at most k edges. The influence gain of a
// removal is the drop in expected influence.
inline Rational best_removal(const Instance& in, size_t k, Goal goal) {
  const auto& e = in.graph.edges;
  const Rational before = edge_objective(in, e, goal);
  Rational best = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << e.size()); ++mask) {
    if (static_cast<size_t>(__builtin_popcountll(mask)) > k) continue;
    std::vector<Edge> kept;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!(mask >> i & 1)) kept.push_back(e[i]);
    }
    const Rational after = edge_objective(in, kept, goal);
    best = std::max<Rational>(best, goal == Goal::kMov ? Rational(after - before) : Rational(before - after));
  }
  return best;
}

inline Rational best_addition(const Instance& in, size_t k, Goal goal) {
  const auto catalog = in.graph.addable_edges();
  const Rational before = edge_objective(in, in.graph.edges, goal);
  Rational best = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << catalog.size()); ++mask) {
    if (static_cast<size_t>(__builtin_popcountll(mask)) > k) continue;
    std::vector<Edge> all = in.graph.edges;
    for (size_t i = 0; i < catalog.size(); ++i) {
      if (mask >> i & 1) all.push_back(catalog[i]);
    }
    best = std::max<Rational>(best, edge_objective(in, all, goal) - before);
  }
  return best;
}

}  // namespace oracle

#endif  // VOTECTL_TESTS_ORACLE_HPP_
