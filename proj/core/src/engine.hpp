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

// Integer evaluation engine shared by the evaluators and the solvers.
//
// Scores are scaled by D = 1 + max score: a voter's revised score for
// candidate i becomes pi(i) * (D - 1) + D * received(i), which orders
// exactly like (1 - eps) * pi(i) + received(i) and never ties.

#ifndef VOTECTL_SRC_ENGINE_HPP_
#define VOTECTL_SRC_ENGINE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "votectl/diffusion.hpp"
#include "votectl/evaluate.hpp"
#include "votectl/model.hpp"
#include "votectl/rational.hpp"

namespace votectl::detail {

class Engine {
 public:
  // The edge universe is the instance's edges followed by `extra`.
  Engine(const Instance& instance, std::span<const Edge> extra);

  int32_t nodes() const { return n_; }
  int32_t candidates() const { return c_; }
  bool bribed() const { return bribed_; }
  const std::vector<Edge>& universe() const { return universe_; }
  size_t base_edge_count() const { return base_edges_; }
  // Universe index of an edge, or -1.
  int32_t find(EdgeKey key) const;

  int64_t base_score(NodeId v, CandidateId c) const {
    return base_[static_cast<size_t>(v) * c_ + c];
  }
  int64_t scale() const { return scale_; }
  CandidateId initial_vote(NodeId v) const { return initial_vote_[v]; }
  const std::vector<int64_t>& initial_votes() const { return initial_votes_; }

  std::span<const int32_t> out_edges(NodeId v) const {
    return {adj_edge_.data() + off_[v], adj_edge_.data() + off_[v + 1]};
  }
  NodeId edge_dst(int32_t e) const { return universe_[e].dst; }

  // Mask over the universe with the instance edges set.
  std::vector<uint8_t> base_mask() const;

  // Vote of voter v given its received increments.
  CandidateId vote(NodeId v, const int64_t* received) const;

 private:
  int32_t n_ = 0;
  int32_t c_ = 0;
  bool bribed_ = false;
  int64_t scale_ = 1;
  std::vector<Edge> universe_;
  size_t base_edges_ = 0;
  std::vector<EdgeKey> sorted_keys_;
  std::vector<int32_t> sorted_index_;
  std::vector<int32_t> off_;
  std::vector<int32_t> adj_edge_;
  std::vector<int64_t> base_;
  std::vector<CandidateId> initial_vote_;
  std::vector<int64_t> initial_votes_;
};

// Seeds and news in flat form.
struct Plan {
  std::vector<NodeId> seeds;
  std::vector<int64_t> news;  // seeds.size() * candidates
  std::vector<CandidateId> pins;
};

Plan compile(const SeedAssignment& assignment, int32_t candidates,
             int32_t nodes);

// Addable catalog entries for the keys, validated against the instance.
std::vector<Edge> lookup_addable(const Instance& instance,
                                 std::span<const EdgeKey> keys);

// Baseline seeds of an edge problem; throws PreconditionFailed if absent.
const SeedAssignment& baseline_of(const Instance& instance);

struct Outcome {
  int64_t mov = 0;
  int64_t c0_votes = 0;
};

// Per-thread scratch space.
class Workspace {
 public:
  explicit Workspace(const Engine& engine);

  // Appends the nodes reachable from s through edges set in both masks.
  // `present` may be null.
  void reach(NodeId s, const uint8_t* live, const uint8_t* present,
             std::vector<NodeId>& out);

  Outcome evaluate(const Plan& plan, const uint8_t* live,
                   const uint8_t* present);
  // Same, from precomputed reach lists indexed by seed node.
  Outcome evaluate_lists(const Plan& plan,
                         const std::vector<std::vector<NodeId>>& reach);

  int64_t chi(std::span<const NodeId> seeds, const uint8_t* live,
              const uint8_t* present);

  // Votes of the last evaluate call.
  const std::vector<int64_t>& votes() const { return votes_; }

 private:
  void begin();
  void receive(NodeId v, const int64_t* news);
  Outcome finish(const Plan& plan);

  const Engine& engine_;
  std::vector<uint32_t> mark_;
  uint32_t epoch_ = 0;
  std::vector<NodeId> queue_;
  std::vector<NodeId> scratch_;
  std::vector<int64_t> received_;
  std::vector<uint8_t> touched_flag_;
  std::vector<NodeId> touched_;
  std::vector<CandidateId> pin_;
  std::vector<int64_t> votes_;
};

// Distribution over live graphs: exact enumeration or a fixed sample.
class Measure {
 public:
  // Random edges are universe edges in `support` with 0 < p < 1.
  Measure(const Engine& engine, const std::vector<uint8_t>& support,
          const EvalConfig& config);

  bool exact() const { return exact_; }
  size_t size() const { return count_; }
  size_t random_edges() const { return random_.size(); }

  // Live mask of outcome k over the universe (support only).
  void fill(size_t k, std::vector<uint8_t>& live) const;
  bool random_bit(size_t k, size_t j) const;

  bool fast() const { return fast_; }
  int64_t fast_weight(size_t k) const { return fast_num_[k]; }
  int64_t fast_denominator() const { return fast_den_; }
  Rational weight(size_t k) const;

 private:
  bool exact_ = true;
  size_t count_ = 1;
  std::vector<uint8_t> certain_;
  std::vector<int32_t> random_;
  std::vector<uint64_t> samples_;  // words_ per sample
  size_t words_ = 0;
  bool fast_ = true;
  int64_t fast_den_ = 1;
  std::vector<int64_t> fast_num_;
  std::vector<Rational> slow_weight_;
};

// Weighted sum of integers under a measure, comparable exactly.
class Accumulator {
 public:
  void add(const Measure& m, size_t k, int64_t v);
  void merge(const Accumulator& other);
  Rational result(const Measure& m) const;
  // Sign of this minus other. Both must come from the same measure.
  int compare(const Accumulator& other) const;

 private:
  __int128 fast_ = 0;
  Rational slow_ = 0;
};

// Chunked sample generation shared by every Monte Carlo path: sample i
// belongs to chunk i / kChunk and draws from derive_rng(seed, chunk).
inline constexpr int64_t kChunk = 1024;

// Runs fn(k, live) for every outcome of the measure, split across workers.
// fn receives the worker index as well so scratch can be per worker.
template <class Fn>
void for_each_outcome(const Measure& m, int workers, Fn&& fn);

int resolve_workers(int requested);

}  // namespace votectl::detail

#include "parallel.hpp"

namespace votectl::detail {

template <class Fn>
void for_each_outcome(const Measure& m, int workers, Fn&& fn) {
  const size_t n = m.size();
  const size_t chunk = 256;
  const size_t chunks = (n + chunk - 1) / chunk;
  parallel_for(chunks, workers, [&](size_t c, int worker) {
    std::vector<uint8_t> live;
    for (size_t k = c * chunk; k < std::min(n, (c + 1) * chunk); ++k) {
      m.fill(k, live);
      fn(k, live, c, worker);
    }
  });
}

}  // namespace votectl::detail

#endif  // VOTECTL_SRC_ENGINE_HPP_
