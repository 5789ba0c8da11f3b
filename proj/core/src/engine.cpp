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

#include "engine.hpp"

#include <algorithm>
#include <numeric>

#include "votectl/errors.hpp"

namespace votectl::detail {

Engine::Engine(const Instance& instance, std::span<const Edge> extra)
    : n_(instance.graph.node_count),
      c_(instance.scores.candidates()),
      bribed_(instance.bribed_seeds),
      scale_(1 + instance.scores.max_score()) {
  universe_ = instance.graph.edges;
  base_edges_ = universe_.size();
  universe_.insert(universe_.end(), extra.begin(), extra.end());

  sorted_index_.resize(universe_.size());
  std::iota(sorted_index_.begin(), sorted_index_.end(), 0);
  std::sort(sorted_index_.begin(), sorted_index_.end(), [&](int32_t a, int32_t b) {
    return universe_[a].key() < universe_[b].key();
  });
  for (int32_t i : sorted_index_) sorted_keys_.push_back(universe_[i].key());

  off_.assign(n_ + 1, 0);
  for (const Edge& e : universe_) ++off_[e.src + 1];
  for (int32_t v = 0; v < n_; ++v) off_[v + 1] += off_[v];
  adj_edge_.resize(universe_.size());
  std::vector<int32_t> pos(off_.begin(), off_.end() - 1);
  for (size_t i = 0; i < universe_.size(); ++i) {
    adj_edge_[pos[universe_[i].src]++] = static_cast<int32_t>(i);
  }

  base_.resize(static_cast<size_t>(n_) * c_);
  initial_vote_.resize(n_);
  initial_votes_.assign(c_, 0);
  for (NodeId v = 0; v < n_; ++v) {
    for (CandidateId i = 0; i < c_; ++i) {
      base_[static_cast<size_t>(v) * c_ + i] =
          instance.scores.at(v, i) * (scale_ - 1);
    }
    initial_vote_[v] = instance.scores.favorite(v);
    ++initial_votes_[initial_vote_[v]];
  }
}

int32_t Engine::find(EdgeKey key) const {
  auto it = std::lower_bound(sorted_keys_.begin(), sorted_keys_.end(), key);
  if (it == sorted_keys_.end() || *it != key) return -1;
  return sorted_index_[it - sorted_keys_.begin()];
}

std::vector<uint8_t> Engine::base_mask() const {
  std::vector<uint8_t> mask(universe_.size(), 0);
  std::fill(mask.begin(), mask.begin() + base_edges_, 1);
  return mask;
}

CandidateId Engine::vote(NodeId v, const int64_t* received) const {
  const int64_t* base = base_.data() + static_cast<size_t>(v) * c_;
  CandidateId best = 0;
  int64_t best_score = base[0] + scale_ * received[0];
  bool tie = false;
  for (CandidateId i = 1; i < c_; ++i) {
    int64_t s = base[i] + scale_ * received[i];
    if (s > best_score) {
      best = i;
      best_score = s;
      tie = false;
    } else if (s == best_score) {
      tie = true;
    }
  }
  if (tie) {
    throw InternalError("tie in revised scores of voter " + std::to_string(v));
  }
  return best;
}

Plan compile(const SeedAssignment& assignment, int32_t candidates,
             int32_t nodes) {
  Plan plan;
  for (const auto& e : assignment.entries()) {
    if (e.node < 0 || e.node >= nodes) {
      throw InvalidInput("seed " + std::to_string(e.node) + " out of range");
    }
    if (static_cast<int32_t>(e.message.news.size()) != candidates) {
      throw InvalidInput("message length does not match candidate count");
    }
    plan.seeds.push_back(e.node);
    plan.news.insert(plan.news.end(), e.message.news.begin(),
                     e.message.news.end());
    plan.pins.push_back(e.bribed_for);
  }
  return plan;
}

Workspace::Workspace(const Engine& engine)
    : engine_(engine),
      mark_(engine.nodes(), 0),
      received_(static_cast<size_t>(engine.nodes()) * engine.candidates(), 0),
      touched_flag_(engine.nodes(), 0),
      pin_(engine.nodes(), -1),
      votes_(engine.candidates(), 0) {}

void Workspace::reach(NodeId s, const uint8_t* live, const uint8_t* present,
                      std::vector<NodeId>& out) {
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  size_t head = out.size();
  mark_[s] = epoch_;
  out.push_back(s);
  while (head < out.size()) {
    NodeId u = out[head++];
    for (int32_t e : engine_.out_edges(u)) {
      if (!live[e] || (present && !present[e])) continue;
      NodeId w = engine_.edge_dst(e);
      if (mark_[w] == epoch_) continue;
      mark_[w] = epoch_;
      out.push_back(w);
    }
  }
}

void Workspace::begin() { touched_.clear(); }

void Workspace::receive(NodeId v, const int64_t* news) {
  const int32_t c = engine_.candidates();
  if (!touched_flag_[v]) {
    touched_flag_[v] = 1;
    touched_.push_back(v);
  }
  int64_t* row = received_.data() + static_cast<size_t>(v) * c;
  for (int32_t i = 0; i < c; ++i) row[i] += news[i];
}

Outcome Workspace::finish(const Plan& plan) {
  const int32_t c = engine_.candidates();
  const bool bribed = engine_.bribed();
  // Bribed seeds vote for their pinned candidate whatever they receive.
  if (bribed) {
    for (size_t i = 0; i < plan.seeds.size(); ++i) pin_[plan.seeds[i]] = plan.pins[i];
  }
  votes_ = engine_.initial_votes();
  for (NodeId v : touched_) {
    int64_t* row = received_.data() + static_cast<size_t>(v) * c;
    CandidateId now = bribed && pin_[v] >= 0 ? pin_[v] : engine_.vote(v, row);
    CandidateId was = engine_.initial_vote(v);
    if (now != was) {
      --votes_[was];
      ++votes_[now];
    }
    std::fill(row, row + c, 0);
    touched_flag_[v] = 0;
  }
  if (bribed) {
    for (NodeId s : plan.seeds) pin_[s] = -1;
  }
  Outcome out;
  out.c0_votes = votes_[0];
  out.mov = margin_of_victory(votes_);
  return out;
}

Outcome Workspace::evaluate(const Plan& plan, const uint8_t* live,
                            const uint8_t* present) {
  begin();
  const int32_t c = engine_.candidates();
  for (size_t i = 0; i < plan.seeds.size(); ++i) {
    scratch_.clear();
    reach(plan.seeds[i], live, present, scratch_);
    for (NodeId v : scratch_) receive(v, plan.news.data() + i * c);
  }
  return finish(plan);
}

Outcome Workspace::evaluate_lists(
    const Plan& plan, const std::vector<std::vector<NodeId>>& reach) {
  begin();
  const int32_t c = engine_.candidates();
  for (size_t i = 0; i < plan.seeds.size(); ++i) {
    for (NodeId v : reach[plan.seeds[i]]) {
      receive(v, plan.news.data() + i * c);
    }
  }
  return finish(plan);
}

int64_t Workspace::chi(std::span<const NodeId> seeds, const uint8_t* live,
                       const uint8_t* present) {
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  for (NodeId s : seeds) {
    if (mark_[s] == epoch_) continue;
    mark_[s] = epoch_;
    queue_.push_back(s);
  }
  for (size_t head = 0; head < queue_.size(); ++head) {
    NodeId u = queue_[head];
    for (int32_t e : engine_.out_edges(u)) {
      if (!live[e] || (present && !present[e])) continue;
      NodeId w = engine_.edge_dst(e);
      if (mark_[w] == epoch_) continue;
      mark_[w] = epoch_;
      queue_.push_back(w);
    }
  }
  return static_cast<int64_t>(queue_.size());
}

}  // namespace votectl::detail
