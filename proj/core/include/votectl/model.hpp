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

#ifndef VOTECTL_MODEL_HPP_
#define VOTECTL_MODEL_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "votectl/rational.hpp"

namespace votectl {

using NodeId = int32_t;
// Candidate index; 0 is always the manipulator's candidate c0.
using CandidateId = int32_t;

struct EdgeKey {
  NodeId src = 0;
  NodeId dst = 0;
  auto operator<=>(const EdgeKey&) const = default;
};

struct Edge {
  NodeId src = 0;
  NodeId dst = 0;
  Rational p = 1;

  EdgeKey key() const { return {src, dst}; }
  bool operator==(const Edge& o) const {
    return src == o.src && dst == o.dst && p == o.p;
  }
};

struct InfluenceGraph {
  int32_t node_count = 0;
  std::vector<Edge> edges;
  // Unset means every absent non-loop pair with probability 1.
  std::optional<std::vector<Edge>> addable;

  // Materializes the addable catalog, expanding the default.
  std::vector<Edge> addable_edges() const;

  void add_edge(NodeId src, NodeId dst, Rational p = 1);
  // Two directed edges with the same probability.
  void add_undirected_edge(NodeId u, NodeId v, Rational p = 1);
};

class ScoreProfile {
 public:
  ScoreProfile() = default;
  ScoreProfile(int32_t voters, int32_t candidates);

  int32_t voters() const { return voters_; }
  int32_t candidates() const { return candidates_; }
  int64_t& at(NodeId v, CandidateId c) {
    return values_[static_cast<size_t>(v) * candidates_ + c];
  }
  int64_t at(NodeId v, CandidateId c) const {
    return values_[static_cast<size_t>(v) * candidates_ + c];
  }
  std::span<const int64_t> row(NodeId v) const {
    return {values_.data() + static_cast<size_t>(v) * candidates_,
            static_cast<size_t>(candidates_)};
  }
  void set_row(NodeId v, std::span<const int64_t> values);
  // Appends a voter and returns its id.
  NodeId push_row(std::span<const int64_t> values);

  int64_t max_score() const;
  // Candidate with the highest initial score.
  CandidateId favorite(NodeId v) const;

  bool operator==(const ScoreProfile&) const = default;

 private:
  int32_t voters_ = 0;
  int32_t candidates_ = 0;
  std::vector<int64_t> values_;
};

struct Message {
  std::vector<int64_t> news;

  Message() = default;
  explicit Message(std::vector<int64_t> q) : news(std::move(q)) {}
  static Message single(int32_t candidates, CandidateId c, int64_t q);

  // Budget cost, the sum of absolute entries.
  int64_t magnitude() const;
  bool is_single_news_article() const;
  bool operator==(const Message&) const = default;
  auto operator<=>(const Message&) const = default;
};

struct SeedEntry {
  NodeId node = 0;
  Message message;
  // Pinned vote of the seed when seeds are bribed.
  CandidateId bribed_for = 0;
  bool operator==(const SeedEntry&) const = default;
};

// Seeds and their messages, kept sorted by node id.
class SeedAssignment {
 public:
  SeedAssignment() = default;
  explicit SeedAssignment(std::vector<SeedEntry> entries);

  // Throws InvalidInput when the node is already a seed.
  void add(NodeId node, Message message, CandidateId bribed_for = 0);
  bool contains(NodeId node) const;
  const std::vector<SeedEntry>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  int64_t cost() const;
  std::vector<NodeId> nodes() const;
  // True when every message is the same single-news-article message.
  bool is_single_news_article_setting() const;

  bool operator==(const SeedAssignment&) const = default;

 private:
  std::vector<SeedEntry> entries_;
};

// Budget with an explicit unlimited marker.
struct Budget {
  std::optional<int64_t> limit;

  static Budget of(int64_t b) { return Budget{b}; }
  static Budget unlimited() { return Budget{}; }
  bool is_unlimited() const { return !limit.has_value(); }
  bool allows(int64_t cost) const { return !limit || cost <= *limit; }
  std::string to_string() const;
  static Budget parse(const std::string& text);
  bool operator==(const Budget&) const = default;
};

struct Instance {
  std::string name;
  InfluenceGraph graph;
  ScoreProfile scores;
  // Fixed seeds for the edge manipulation problems.
  std::optional<SeedAssignment> baseline;
  bool bribed_seeds = false;
  // Budget suggested by a generator.
  std::optional<Budget> budget;

  int32_t node_count() const { return graph.node_count; }
  int32_t candidate_count() const { return scores.candidates(); }
};

struct Violation {
  std::string code;
  std::string detail;
};

std::vector<Violation> validate(const Instance& instance);
// Throws InvalidInput listing the violations, if any.
void require_valid(const Instance& instance);

Rational epsilon(const Instance& instance);
int64_t delta(const Instance& instance);
bool is_hard_to_manipulate(const Instance& instance, int64_t budget);
// Every row is a permutation of {0, ..., l}.
bool has_unitary_score_distances(const Instance& instance);

// Copy of the instance with one edge probability changed. The edge may be
// an existing or an addable edge; throws InvalidInput when it is neither.
Instance with_edge_probability(const Instance& instance, EdgeKey edge,
                               const Rational& p);

}  // namespace votectl

#endif  // VOTECTL_MODEL_HPP_
