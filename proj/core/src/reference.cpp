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

#include "reference.hpp"

#include <algorithm>
#include <set>

#include "votectl/errors.hpp"

namespace votectl::reference {

std::vector<std::vector<NodeId>> timed_cascade(const Instance& instance,
                                               const LiveGraph& live,
                                               const SeedAssignment& assignment) {
  const int32_t n = instance.node_count();
  const auto& seeds = assignment.entries();
  // active[v][j]: round in which v received message j, or -1.
  std::vector<std::vector<int>> active(n, std::vector<int>(seeds.size(), -1));
  for (size_t j = 0; j < seeds.size(); ++j) active[seeds[j].node][j] = 0;
  for (int round = 1;; ++round) {
    bool changed = false;
    for (const EdgeKey& e : live.active) {
      for (size_t j = 0; j < seeds.size(); ++j) {
        if (active[e.src][j] == round - 1 && active[e.dst][j] < 0) {
          active[e.dst][j] = round;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  std::vector<std::vector<NodeId>> out(seeds.size());
  for (size_t j = 0; j < seeds.size(); ++j) {
    for (NodeId v = 0; v < n; ++v) {
      if (active[v][j] >= 0) out[j].push_back(v);
    }
  }
  return out;
}

std::vector<Outcome> outcomes(const Instance& instance,
                              const std::vector<Edge>& edges,
                              const SeedAssignment& assignment) {
  const int32_t n = instance.node_count();
  const int32_t c = instance.candidate_count();
  std::vector<size_t> random;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].p > 0 && edges[i].p < 1) random.push_back(i);
  }
  if (random.size() > 24) throw CapExceeded("reference random edges", random.size(), 24);
  const Rational keep = Rational(1) - Rational(1, 1 + instance.scores.max_score());
  std::vector<Outcome> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << random.size()); ++mask) {
    LiveGraph live;
    Outcome o;
    o.probability = 1;
    std::vector<uint8_t> on(edges.size(), 0);
    for (size_t i = 0; i < edges.size(); ++i) on[i] = edges[i].p == 1;
    for (size_t b = 0; b < random.size(); ++b) {
      const Edge& e = edges[random[b]];
      const bool set = mask >> b & 1;
      on[random[b]] = set;
      o.probability *= set ? e.p : Rational(1) - e.p;
    }
    for (size_t i = 0; i < edges.size(); ++i) {
      if (on[i]) live.active.push_back(edges[i].key());
    }
    std::sort(live.active.begin(), live.active.end());
    auto reached = timed_cascade(instance, live, assignment);
    std::vector<Rational> score(static_cast<size_t>(n) * c);
    for (NodeId v = 0; v < n; ++v) {
      for (CandidateId i = 0; i < c; ++i) score[v * c + i] = keep * instance.scores.at(v, i);
    }
    const auto& seeds = assignment.entries();
    for (size_t j = 0; j < seeds.size(); ++j) {
      for (NodeId v : reached[j]) {
        for (CandidateId i = 0; i < c; ++i) score[v * c + i] += seeds[j].message.news[i];
      }
    }
    o.votes.assign(c, 0);
    std::set<NodeId> pinned;
    if (instance.bribed_seeds) {
      for (const auto& s : seeds) {
        pinned.insert(s.node);
        ++o.votes[s.bribed_for];
      }
    }
    for (NodeId v = 0; v < n; ++v) {
      if (pinned.count(v)) continue;
      CandidateId best = 0;
      for (CandidateId i = 1; i < c; ++i) {
        if (score[v * c + i] > score[v * c + best]) best = i;
      }
      for (CandidateId i = 0; i < c; ++i) {
        if (i != best && score[v * c + i] == score[v * c + best]) o.tie = true;
      }
      ++o.votes[best];
    }
    int64_t rival = 0;
    for (CandidateId i = 1; i < c; ++i) rival = std::max(rival, o.votes[i]);
    o.mov = o.votes[0] - rival;
    out.push_back(std::move(o));
  }
  return out;
}

Rational expected_mov(const std::vector<Outcome>& outcomes) {
  Rational sum = 0;
  for (const auto& o : outcomes) sum += o.probability * o.mov;
  return sum;
}

}  // namespace votectl::reference
