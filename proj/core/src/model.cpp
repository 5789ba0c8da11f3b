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

#include "votectl/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "votectl/errors.hpp"

namespace votectl {

std::vector<Edge> InfluenceGraph::addable_edges() const {
  if (addable) return *addable;
  std::set<EdgeKey> present;
  for (const Edge& e : edges) present.insert(e.key());
  std::vector<Edge> out;
  for (NodeId u = 0; u < node_count; ++u) {
    for (NodeId v = 0; v < node_count; ++v) {
      if (u != v && !present.count({u, v})) out.push_back({u, v, 1});
    }
  }
  return out;
}

void InfluenceGraph::add_edge(NodeId src, NodeId dst, Rational p) {
  edges.push_back({src, dst, std::move(p)});
}

void InfluenceGraph::add_undirected_edge(NodeId u, NodeId v, Rational p) {
  edges.push_back({u, v, p});
  edges.push_back({v, u, std::move(p)});
}

ScoreProfile::ScoreProfile(int32_t voters, int32_t candidates)
    : voters_(voters),
      candidates_(candidates),
      values_(static_cast<size_t>(voters) * candidates, 0) {}

void ScoreProfile::set_row(NodeId v, std::span<const int64_t> values) {
  if (static_cast<int32_t>(values.size()) != candidates_) {
    throw InvalidInput("score row has the wrong length");
  }
  std::copy(values.begin(), values.end(),
            values_.begin() + static_cast<size_t>(v) * candidates_);
}

NodeId ScoreProfile::push_row(std::span<const int64_t> values) {
  if (static_cast<int32_t>(values.size()) != candidates_) {
    throw InvalidInput("score row has the wrong length");
  }
  values_.insert(values_.end(), values.begin(), values.end());
  return voters_++;
}

int64_t ScoreProfile::max_score() const {
  int64_t m = 0;
  for (int64_t x : values_) m = std::max(m, x);
  return m;
}

CandidateId ScoreProfile::favorite(NodeId v) const {
  auto r = row(v);
  return static_cast<CandidateId>(std::max_element(r.begin(), r.end()) -
                                  r.begin());
}

Message Message::single(int32_t candidates, CandidateId c, int64_t q) {
  Message m;
  m.news.assign(candidates, 0);
  m.news[c] = q;
  return m;
}

int64_t Message::magnitude() const {
  int64_t total = 0;
  for (int64_t q : news) total += q < 0 ? -q : q;
  return total;
}

bool Message::is_single_news_article() const {
  int nonzero = 0;
  for (int64_t q : news) {
    if (q == 0) continue;
    if (q != 1 && q != -1) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

SeedAssignment::SeedAssignment(std::vector<SeedEntry> entries) {
  for (auto& e : entries) add(e.node, std::move(e.message), e.bribed_for);
}

void SeedAssignment::add(NodeId node, Message message,
                         CandidateId bribed_for) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), node,
      [](const SeedEntry& e, NodeId n) { return e.node < n; });
  if (it != entries_.end() && it->node == node) {
    throw InvalidInput("node " + std::to_string(node) +
                       " is seeded twice");
  }
  entries_.insert(it, SeedEntry{node, std::move(message), bribed_for});
}

bool SeedAssignment::contains(NodeId node) const {
  return std::binary_search(
      entries_.begin(), entries_.end(), SeedEntry{node, {}, 0},
      [](const SeedEntry& a, const SeedEntry& b) { return a.node < b.node; });
}

int64_t SeedAssignment::cost() const {
  int64_t total = 0;
  for (const auto& e : entries_) total += e.message.magnitude();
  return total;
}

std::vector<NodeId> SeedAssignment::nodes() const {
  std::vector<NodeId> out;
  for (const auto& e : entries_) out.push_back(e.node);
  return out;
}

bool SeedAssignment::is_single_news_article_setting() const {
  if (entries_.empty()) return false;
  const Message& first = entries_.front().message;
  if (!first.is_single_news_article()) return false;
  for (const auto& e : entries_) {
    if (e.message != first) return false;
  }
  return true;
}

std::string Budget::to_string() const {
  return limit ? std::to_string(*limit) : std::string("inf");
}

Budget Budget::parse(const std::string& text) {
  if (text == "inf" || text == "unlimited") return unlimited();
  try {
    size_t used = 0;
    long long b = std::stoll(text, &used);
    if (used != text.size() || b < 0) throw InvalidInput("bad budget");
    return of(b);
  } catch (const std::exception&) {
    throw InvalidInput("budget must be a non-negative integer or inf: " +
                       text);
  }
}

std::vector<Violation> validate(const Instance& instance) {
  std::vector<Violation> out;
  auto report = [&](const std::string& code, const std::string& detail) {
    out.push_back({code, detail});
  };
  const int32_t n = instance.graph.node_count;
  const int32_t c = instance.scores.candidates();
  if (n < 0) report("negative node count", std::to_string(n));
  if (c < 2) {
    report("too few candidates", "need at least 2, got " + std::to_string(c));
  }
  if (instance.scores.voters() != n) {
    report("score row count mismatch",
           std::to_string(instance.scores.voters()) + " rows for " +
               std::to_string(n) + " nodes");
  }
  for (NodeId v = 0; v < instance.scores.voters(); ++v) {
    auto row = instance.scores.row(v);
    for (int32_t i = 0; i < c; ++i) {
      if (row[i] < 0) {
        report("negative score", "voter " + std::to_string(v) +
                                     " candidate " + std::to_string(i));
      }
      for (int32_t j = i + 1; j < c; ++j) {
        if (row[i] == row[j]) {
          report("non-injective score row",
                 "voter " + std::to_string(v) + " candidates " +
                     std::to_string(i) + "," + std::to_string(j));
        }
      }
    }
  }
  std::set<EdgeKey> seen;
  auto check_edges = [&](const std::vector<Edge>& edges, const char* kind) {
    for (const Edge& e : edges) {
      std::string where = std::string(kind) + " (" + std::to_string(e.src) +
                          "," + std::to_string(e.dst) + ")";
      if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
        report("edge endpoint out of range", where);
      }
      if (e.src == e.dst) report("self-loop", where);
      if (e.p < 0 || e.p > 1) report("probability out of range", where);
      if (!seen.insert(e.key()).second) report("duplicate edge", where);
    }
  };
  check_edges(instance.graph.edges, "edge");
  if (instance.graph.addable) check_edges(*instance.graph.addable, "addable");
  auto check_seeds = [&](const SeedAssignment& a) {
    for (const auto& e : a.entries()) {
      std::string where = "seed " + std::to_string(e.node);
      if (e.node < 0 || e.node >= n) report("seed out of range", where);
      if (static_cast<int32_t>(e.message.news.size()) != c) {
        report("message length mismatch", where);
      } else if (e.message.magnitude() < 1) {
        report("empty message", where);
      }
      if (e.bribed_for < 0 || e.bribed_for >= c) {
        report("bribed candidate out of range", where);
      }
    }
  };
  if (instance.baseline) check_seeds(*instance.baseline);
  if (instance.budget && instance.budget->limit && *instance.budget->limit < 0) {
    report("negative budget", instance.budget->to_string());
  }
  return out;
}

void require_valid(const Instance& instance) {
  auto violations = validate(instance);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance";
  for (const auto& v : violations) msg << "; " << v.code << ": " << v.detail;
  throw InvalidInput(msg.str());
}

Rational epsilon(const Instance& instance) {
  return Rational(1, 1 + instance.scores.max_score());
}

int64_t delta(const Instance& instance) {
  int64_t d = 0;
  const auto& s = instance.scores;
  for (NodeId v = 0; v < s.voters(); ++v) {
    for (CandidateId i = 1; i < s.candidates(); ++i) {
      d = std::max(d, s.at(v, i) - s.at(v, 0));
    }
  }
  return d;
}

bool is_hard_to_manipulate(const Instance& instance, int64_t budget) {
  return budget < delta(instance);
}

bool has_unitary_score_distances(const Instance& instance) {
  const auto& s = instance.scores;
  for (NodeId v = 0; v < s.voters(); ++v) {
    std::vector<int64_t> row(s.row(v).begin(), s.row(v).end());
    std::sort(row.begin(), row.end());
    for (size_t i = 0; i < row.size(); ++i) {
      if (row[i] != static_cast<int64_t>(i)) return false;
    }
  }
  return true;
}

Instance with_edge_probability(const Instance& instance, EdgeKey edge,
                               const Rational& p) {
  if (p < 0 || p > 1) throw InvalidInput("probability out of range");
  Instance out = instance;
  for (Edge& e : out.graph.edges) {
    if (e.key() == edge) {
      e.p = p;
      return out;
    }
  }
  std::vector<Edge> addable = out.graph.addable_edges();
  for (Edge& e : addable) {
    if (e.key() == edge) {
      e.p = p;
      out.graph.addable = std::move(addable);
      return out;
    }
  }
  throw InvalidInput("unknown edge (" + std::to_string(edge.src) + "," +
                     std::to_string(edge.dst) + ")");
}

}  // namespace votectl
