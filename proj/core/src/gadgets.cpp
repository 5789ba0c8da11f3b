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

#include "votectl/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "votectl/errors.hpp"

namespace votectl {

namespace {

class Builder {
 public:
  Builder(std::string name, int32_t candidates) {
    inst_.name = std::move(name);
    inst_.scores = ScoreProfile(0, candidates);
  }

  NodeId node(std::vector<int64_t> row) {
    NodeId id = inst_.scores.push_row(row);
    inst_.graph.node_count = inst_.scores.voters();
    return id;
  }

  // A directed line of p=1 edges; returns the first node.
  NodeId line(int64_t count, const std::vector<int64_t>& row) {
    NodeId first = inst_.graph.node_count;
    for (int64_t i = 0; i < count; ++i) {
      NodeId v = node(row);
      if (i > 0) edge(v - 1, v);
    }
    return first;
  }

  NodeId block(int64_t count, const std::vector<int64_t>& row) {
    NodeId first = inst_.graph.node_count;
    for (int64_t i = 0; i < count; ++i) node(row);
    return first;
  }

  void edge(NodeId u, NodeId v, Rational p = 1) { inst_.graph.add_edge(u, v, p); }
  void undirected(NodeId u, NodeId v) { inst_.graph.add_undirected_edge(u, v); }

  void seed(NodeId v, std::vector<int64_t> news) {
    if (!inst_.baseline) inst_.baseline = SeedAssignment();
    inst_.baseline->add(v, Message(std::move(news)));
  }

  void addable(NodeId u, NodeId v, Rational p = 1) {
    if (!inst_.graph.addable) inst_.graph.addable = std::vector<Edge>();
    inst_.graph.addable->push_back({u, v, std::move(p)});
  }

  Instance take(std::optional<Budget> budget) {
    inst_.budget = budget;
    require_valid(inst_);
    return std::move(inst_);
  }

 private:
  Instance inst_;
};

int64_t squared(int64_t x) { return x * x; }

std::vector<int32_t> padded(const SetCover& sc, std::vector<int32_t> cover) {
  std::set<int32_t> in(cover.begin(), cover.end());
  for (int32_t i = 0; i < sc.g() && static_cast<int32_t>(in.size()) < sc.h; ++i) {
    in.insert(i);
  }
  return {in.begin(), in.end()};
}

void check_cover_indices(const SetCover& sc, const std::vector<int32_t>& cover) {
  for (int32_t i : cover) {
    if (i < 0 || i >= sc.g()) throw InvalidInput("set index out of range");
  }
}

}  // namespace

Instance example1_clique() {
  Builder b("example1-clique", 5);
  b.node({3, 4, 2, 1, 0});
  b.node({0, 1, 4, 2, 3});
  b.node({0, 1, 3, 4, 2});
  b.node({1, 3, 4, 0, 2});
  b.node({2, 0, 4, 3, 1});
  for (NodeId u = 0; u < 5; ++u) {
    for (NodeId v = 0; v < 5; ++v) {
      if (u != v) b.edge(u, v);
    }
  }
  return b.take(Budget::of(2));
}

SeedAssignment example1_mixed_plan() {
  SeedAssignment s;
  s.add(0, Message::single(5, 0, 1));
  s.add(1, Message::single(5, 2, -1));
  return s;
}

Instance example2_diamond() {
  Builder b("example2-diamond", 3);
  const NodeId a = b.node({0, 2, 1});
  const NodeId bb = b.node({2, 1, 0});
  const NodeId c = b.node({0, 1, 9});
  const NodeId d = b.node({0, 1, 2});
  const NodeId e = b.node({2, 1, 0});
  b.edge(a, c);
  b.edge(bb, c, Rational(1, 2));
  b.edge(c, d);
  b.edge(e, d);
  b.seed(a, {0, 1, 0});
  b.seed(bb, {1, 0, 0});
  b.seed(e, {1, 0, 0});
  return b.take(std::nullopt);
}

Instance setcover_ecs(const SetCover& sc) {
  check_set_system(sc);
  const int64_t n = sc.n, g = sc.g(), h = sc.h;
  if (h < 1 || h > g) throw InvalidInput("set cover gadget needs 1 <= h <= g");
  const int64_t B = h + 1;
  Builder b("setcover-ecs", 3);
  const NodeId sets = b.block(g, {0, B, B + 1});
  const NodeId elems = b.block(n, {0, B, B + 1});
  for (int64_t i = 0; i < g; ++i) {
    for (int32_t z : sc.sets[i]) b.edge(sets + i, elems + z - 1);
  }
  auto clique = [&](NodeId first, int64_t size) {
    for (int64_t u = 0; u < size; ++u) {
      for (int64_t v = 0; v < size; ++v) {
        if (u != v) b.edge(first + u, first + v);
      }
    }
  };
  const int64_t g2 = n + h + 1;
  clique(b.block(g2, {0, B + 1, B}), g2);
  const NodeId g3 = b.block(n + g + 2, {B, B - 1, B - 2});
  b.block(g - h + 1, {1, B + 2, 0});
  clique(g3, n + 2 * g - h + 3);
  return b.take(Budget::of(B));
}

SeedAssignment setcover_ecs_witness(const SetCover& sc,
                                    const std::vector<int32_t>& cover) {
  check_cover_indices(sc, cover);
  SeedAssignment s;
  for (int32_t i : padded(sc, cover)) s.add(i, Message::single(3, 1, 1));
  s.add(sc.g() + sc.n, Message::single(3, 2, 1));
  return s;
}

Instance prop1_greedy_trap() {
  Builder b("prop1-greedy-trap", 3);
  auto path = [&](int count, std::vector<int64_t> row) {
    NodeId first = b.block(count, row);
    for (int i = 1; i < count; ++i) b.undirected(first + i - 1, first + i);
  };
  path(7, {5, 1, 0});
  path(5, {0, 5, 3});
  path(2, {0, 4, 3});
  path(4, {0, 3, 5});
  path(1, {0, 4, 5});
  return b.take(Budget::of(2));
}

SeedAssignment prop1_optimal_plan() {
  SeedAssignment s;
  s.add(12, Message::single(3, 2, 1));
  s.add(18, Message::single(3, 1, 1));
  return s;
}

NodeId prop2_x(int32_t r) { return 7 * r; }
NodeId prop2_y(int32_t r) { return 9 * r + 1; }

Instance prop2_tree_trap(int32_t r) {
  if (r < 3) throw InvalidInput("the tree trap needs r >= 3");
  Builder b("prop2-tree-trap", 3);
  b.line(7 * r, {5, 1, 0});
  auto star = [&](int64_t leaves, std::vector<int64_t> row) {
    NodeId root = b.block(leaves + 1, row);
    for (int64_t i = 1; i <= leaves; ++i) b.edge(root, root + i);
  };
  star(2 * r, {0, 4, 3});
  star(r, {0, 4, 5});
  star(5 * r - 2, {0, 6, 3});
  star(4 * r - 2, {0, 3, 6});
  return b.take(Budget::of(2));
}

SeedAssignment prop2_optimal_plan(int32_t r) {
  SeedAssignment s;
  s.add(prop2_x(r), Message::single(3, 2, 1));
  s.add(prop2_y(r), Message::single(3, 1, 1));
  return s;
}

Instance partition_line(const PartitionInput& pm) {
  const int64_t n = static_cast<int64_t>(pm.a.size());
  if (n == 0) throw InvalidInput("empty multiset");
  const int64_t sum = std::accumulate(pm.a.begin(), pm.a.end(), int64_t{0});
  if (sum % 2 != 0) throw InvalidInput("the multiset sum must be even");
  const int64_t t = sum / 2;
  for (int64_t a : pm.a) {
    if (a <= 0 || a >= t) throw InvalidInput("every a_i must satisfy 0 < a_i < t");
  }
  if (pm.k < 1 || 2 * pm.k > n) throw InvalidInput("k must satisfy 1 <= k <= n/2");
  const int64_t B = pm.k;
  Builder b("partition-line", 4);
  for (int64_t i = 0; i < n; ++i) {
    const Rational p(pm.a[i], 4 * t);
    const double pd = to_double(p);
    const double w = std::exp2(-4.0 * pd) /
                     ((1.0 - pd) * std::pow(2.0 * std::log(2.0), 1.0 / pm.k));
    const NodeId a = b.block(3, {0, B + 2, B + 1, 1});
    b.block(2, {0, B, B + 1, B + 2});
    b.edge(a, a + 1);
    b.edge(a + 1, a + 2, Rational(1) - p);
    b.edge(a + 2, a + 3, from_double(w));
    b.edge(a + 3, a + 4);
  }
  b.block(5 * n, {0, B + 2, B + 1, B});
  b.block(8 * n + 1 - 8 * B, {0, B + 1, B + 2, B});
  // c0 needs 8n isolated supporters for the initial tie with c1.
  b.block(8 * n, {4, 3, 2, 1});
  return b.take(Budget::of(B));
}

SeedAssignment partition_seeding(const PartitionInput& pm,
                                 const std::vector<int32_t>& lines) {
  SeedAssignment s;
  for (int32_t i : lines) {
    if (i < 0 || i >= static_cast<int32_t>(pm.a.size())) {
      throw InvalidInput("line index out of range");
    }
    s.add(5 * i, Message::single(4, 2, 1));
  }
  return s;
}

Instance dks_ecs(const SimpleGraph& g, int32_t budget) {
  check_graph(g);
  Builder b("dks-ecs", 2);
  b.block(g.n, {1, 0});
  for (auto [u, v] : g.edges) {
    NodeId e = b.node({0, 2});
    b.edge(u, e);
    b.edge(v, e);
  }
  return b.take(Budget::of(budget));
}

SeedAssignment dks_seeding(const SimpleGraph& g,
                           const std::vector<int32_t>& vertices) {
  SeedAssignment s;
  for (int32_t v : vertices) {
    if (v < 0 || v >= g.n) throw InvalidInput("vertex out of range");
    s.add(v, Message::single(2, 0, 1));
  }
  return s;
}

Instance msi_imer(const MsiInput& m, int32_t replication, bool negative_messages) {
  check_set_system(m);
  const int32_t g = m.g();
  if (m.h < 1 || m.h > g) throw InvalidInput("MSI gadget needs 1 <= h <= g");
  if (replication < 1) throw InvalidInput("replication must be positive");
  std::vector<int32_t> hits(m.n + 1, 0);
  for (const auto& x : m.sets) {
    for (int32_t z : x) ++hits[z];
  }
  for (int32_t z = 1; z <= m.n; ++z) {
    // Copies of such an element would never be reached at all.
    if (hits[z] == g) {
      throw InvalidInput("element " + std::to_string(z) + " lies in every set");
    }
  }
  Builder b(negative_messages ? "msi-imer-companion" : "msi-imer", 2);
  for (int32_t i = 0; i < g; ++i) {
    NodeId one = b.node({1, 0});
    b.node({1, 0});
    b.edge(one, one + 1);
    b.seed(one, {negative_messages ? -1 : 1, 0});
  }
  const NodeId copies = b.block(static_cast<int64_t>(m.n) * replication, {1, 0});
  for (int32_t i = 0; i < g; ++i) {
    std::set<int32_t> in(m.sets[i].begin(), m.sets[i].end());
    for (int32_t z = 1; z <= m.n; ++z) {
      if (in.count(z)) continue;
      for (int32_t j = 0; j < replication; ++j) {
        b.edge(2 * i + 1, copies + (z - 1) * replication + j);
      }
    }
  }
  return b.take(Budget::of(g - m.h));
}

std::vector<EdgeKey> msi_imer_witness(const MsiInput& m,
                                      const std::vector<int32_t>& chosen) {
  std::set<int32_t> keep(chosen.begin(), chosen.end());
  std::vector<EdgeKey> out;
  for (int32_t i = 0; i < m.g(); ++i) {
    if (!keep.count(i)) out.push_back({2 * i, 2 * i + 1});
  }
  return out;
}

namespace {

struct IndependentLayout {
  NodeId line_last;
  NodeId vertices;
};

IndependentLayout independent_layout(const SimpleGraph& g) {
  const int64_t ne = static_cast<int64_t>(g.edges.size());
  const int64_t line = ne * g.n - g.n;
  return {static_cast<NodeId>(line - 1), static_cast<NodeId>(line)};
}

}  // namespace

Instance independent_set_ecer(const SimpleGraph& g) {
  check_graph(g);
  const int64_t gv = g.n;
  const int64_t ne = static_cast<int64_t>(g.edges.size());
  if (ne < 2) throw InvalidInput("the gadget needs at least two source edges");
  Builder b("independent-set-ecer", 3);
  const NodeId l1 = b.line(ne * gv - gv, {2, 0, 1});
  b.seed(l1, {0, 0, 1});
  const auto layout = independent_layout(g);
  b.block(gv, {2, 0, 1});
  for (int64_t x = 0; x < gv; ++x) b.edge(layout.line_last, layout.vertices + x);
  for (auto [u, v] : g.edges) {
    NodeId first = b.line(gv, {0, 2, 1});
    b.edge(layout.vertices + u, first);
    b.edge(layout.vertices + v, first);
  }
  b.block(squared(ne * gv), {2, 1, 0});
  b.block(squared(ne * gv), {1, 2, 0});
  return b.take(Budget::unlimited());
}

std::vector<EdgeKey> independent_set_ecer_witness(
    const SimpleGraph& g, const std::vector<int32_t>& independent) {
  const auto layout = independent_layout(g);
  std::vector<EdgeKey> out;
  for (int32_t x : independent) out.push_back({layout.line_last, layout.vertices + x});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Shared layout of the two-candidate set cover gadgets.
struct CoverLayout {
  NodeId v1 = 0;
  NodeId v2 = 1;
  NodeId line_first = 2;
  NodeId line_last = 0;
  NodeId sets = 0;
};

CoverLayout cover_layout(int64_t line) {
  CoverLayout c;
  c.line_last = static_cast<NodeId>(c.line_first + line - 1);
  c.sets = c.line_last + 1;
  return c;
}

void check_cover_gadget(const SetCover& sc) {
  check_set_system(sc);
  if (sc.n <= sc.g()) throw InvalidInput("the gadget needs more elements than sets");
  if (sc.h < 1 || sc.h > sc.g()) throw InvalidInput("the gadget needs 1 <= h <= g");
}

// Set nodes with element lines of the given length and favorite.
void add_sets_and_lines(Builder& b, const SetCover& sc, NodeId line_last,
                        int64_t line_length, const std::vector<int64_t>& set_row,
                        const std::vector<int64_t>& line_row, bool link) {
  const NodeId sets = b.block(sc.g(), set_row);
  if (link) {
    for (int32_t i = 0; i < sc.g(); ++i) b.edge(line_last, sets + i);
  }
  std::vector<NodeId> heads;
  for (int32_t z = 1; z <= sc.n; ++z) heads.push_back(b.line(line_length, line_row));
  for (int32_t i = 0; i < sc.g(); ++i) {
    for (int32_t z : sc.sets[i]) b.edge(sets + i, heads[z - 1]);
  }
}

}  // namespace

Instance setcover_ecer(const SetCover& sc) {
  check_cover_gadget(sc);
  const int64_t n = sc.n, g = sc.g(), h = sc.h;
  Builder b("setcover-ecer", 2);
  const NodeId v1 = b.node({1, 0});
  const NodeId v2 = b.node({1, 0});
  b.seed(v1, {1, -1});
  b.seed(v2, {-1, 0});
  b.edge(v1, v2);
  const NodeId l1 = b.line(n * n - h - 1, {1, 0});
  b.seed(l1, {0, 1});
  b.edge(v1, l1, Rational(1, 2));
  b.edge(v2, l1);
  const auto layout = cover_layout(n * n - h - 1);
  add_sets_and_lines(b, sc, layout.line_last, n, {1, 0}, {0, 1}, true);
  b.block(g - h + 1, {0, 1});
  return b.take(Budget::unlimited());
}

std::vector<EdgeKey> setcover_ecer_witness(const SetCover& sc,
                                           const std::vector<int32_t>& cover) {
  check_cover_indices(sc, cover);
  const auto layout = cover_layout(int64_t{sc.n} * sc.n - sc.h - 1);
  std::set<int32_t> in(cover.begin(), cover.end());
  std::vector<EdgeKey> out{{layout.v2, layout.line_first}};
  for (int32_t i = 0; i < sc.g(); ++i) {
    if (!in.count(i)) out.push_back({layout.line_last, layout.sets + i});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Instance setcover_ecea_single(const SetCover& sc) {
  check_set_system(sc);
  const int64_t n = sc.n, g = sc.g(), h = sc.h;
  if (h < 1 || h > g) throw InvalidInput("the gadget needs 1 <= h <= g");
  if (n * g - h - 1 < 1) throw InvalidInput("the gadget line would be empty");
  Builder b("setcover-ecea-single", 3);
  const NodeId v1 = b.node({0, 1, 2});
  b.seed(v1, {0, 0, 1});
  const NodeId l1 = b.line(n * g - h - 1, {2, 0, 1});
  const NodeId last = static_cast<NodeId>(l1 + n * g - h - 2);
  const NodeId sets = last + 1;
  add_sets_and_lines(b, sc, last, g, {2, 0, 1}, {0, 2, 1}, false);
  b.block(squared(n * g), {2, 1, 0});
  b.block(squared(n * g), {1, 2, 0});
  b.addable(v1, l1);
  for (int64_t i = 0; i < g; ++i) b.addable(last, sets + i);
  return b.take(Budget::unlimited());
}

std::vector<EdgeKey> setcover_ecea_single_witness(
    const SetCover& sc, const std::vector<int32_t>& cover) {
  check_cover_indices(sc, cover);
  const int64_t line = int64_t{sc.n} * sc.g() - sc.h - 1;
  const NodeId last = static_cast<NodeId>(line);
  std::vector<EdgeKey> out{{0, 1}};
  for (int32_t i : cover) out.push_back({last, last + 1 + i});
  std::sort(out.begin(), out.end());
  return out;
}

Instance setcover_ecea_multi(const SetCover& sc) {
  check_cover_gadget(sc);
  const int64_t n = sc.n, g = sc.g(), h = sc.h;
  Builder b("setcover-ecea-multi", 2);
  const NodeId v1 = b.node({1, 0});
  const NodeId v2 = b.node({1, 0});
  b.seed(v1, {1, -1});
  b.seed(v2, {0, 1});
  b.edge(v1, v2, Rational(1, 2));
  const NodeId l1 = b.line(n * n - h - 1, {1, 0});
  const auto layout = cover_layout(n * n - h - 1);
  add_sets_and_lines(b, sc, layout.line_last, n, {1, 0}, {0, 1}, false);
  b.block(g - h + 1, {0, 1});
  b.addable(v2, l1);
  for (int64_t i = 0; i < g; ++i) b.addable(layout.line_last, layout.sets + i);
  return b.take(Budget::unlimited());
}

std::vector<EdgeKey> setcover_ecea_multi_witness(
    const SetCover& sc, const std::vector<int32_t>& cover) {
  check_cover_indices(sc, cover);
  const auto layout = cover_layout(int64_t{sc.n} * sc.n - sc.h - 1);
  std::vector<EdgeKey> out{{layout.v2, layout.line_first}};
  for (int32_t i : cover) out.push_back({layout.line_last, layout.sets + i});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct LayerNodes {
  NodeId hub;
  NodeId sets;
  NodeId elements;
};

LayerNodes layer_nodes(const MaxCoverInput& m, int32_t layer) {
  const NodeId stride = 1 + m.g() + m.n;
  return {layer * stride, layer * stride + 1, layer * stride + 1 + m.g()};
}

}  // namespace

Instance maxcover_imea(const MaxCoverInput& m, const LayeredParams& params) {
  check_set_system(m);
  if (params.layers < 1 || params.sinks < 0) throw InvalidInput("bad layer parameters");
  if (params.q < 0 || params.q > 1) throw InvalidInput("q must lie in [0, 1]");
  Builder b("maxcover-imea", 2);
  for (int32_t i = 0; i < params.layers; ++i) {
    b.block(1 + m.g() + m.n, {1, 0});
  }
  const NodeId last_hub = b.node({1, 0});
  for (int32_t i = 0; i < params.layers; ++i) {
    const auto l = layer_nodes(m, i);
    const NodeId next = i + 1 < params.layers ? layer_nodes(m, i + 1).hub : last_hub;
    for (int32_t j = 0; j < m.g(); ++j) {
      for (int32_t z : m.sets[j]) b.edge(l.sets + j, l.elements + z - 1);
    }
    for (int32_t z = 0; z < m.n; ++z) b.edge(l.elements + z, next, params.q);
    for (int32_t j = 0; j < m.g(); ++j) b.addable(l.hub, l.sets + j);
  }
  const NodeId sinks = b.block(params.sinks, {1, 0});
  for (int32_t s = 0; s < params.sinks; ++s) b.edge(last_hub, sinks + s);
  b.seed(0, {1, 0});
  return b.take(Budget::of(int64_t{m.h} * params.layers));
}

std::vector<EdgeKey> maxcover_imea_witness(const MaxCoverInput& m,
                                           const LayeredParams& params,
                                           const std::vector<int32_t>& chosen) {
  std::vector<EdgeKey> out;
  for (int32_t i = 0; i < params.layers; ++i) {
    const auto l = layer_nodes(m, i);
    for (int32_t j : chosen) out.push_back({l.hub, l.sets + j});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int64_t score_spread(const Instance& instance) {
  int64_t d = 0;
  for (NodeId v = 0; v < instance.node_count(); ++v) {
    auto row = instance.scores.row(v);
    auto [lo, hi] = std::minmax_element(row.begin(), row.end());
    d = std::max(d, *hi - *lo);
  }
  return d;
}

WrappedInstance reopt_wrapper(const Instance& inner) {
  require_valid(inner);
  const int32_t c = inner.candidate_count();
  const int32_t n = inner.node_count();
  // Worst total lead the inner seeds can give any rival over c0.
  int64_t slack = 0;
  if (inner.baseline) {
    for (const auto& e : inner.baseline->entries()) {
      int64_t worst = 0;
      for (CandidateId i = 1; i < c; ++i) {
        worst = std::max(worst, e.message.news[i] - e.message.news[0]);
      }
      slack += worst;
    }
  }
  const int64_t k = score_spread(inner) + 1 + slack;

  WrappedInstance w;
  Instance& out = w.instance;
  out = inner;
  out.name = inner.name + "-reopt-wrapper";
  out.graph.addable = inner.graph.addable_edges();
  if (!out.baseline) out.baseline = SeedAssignment();
  std::vector<int64_t> row(c);
  for (CandidateId i = 0; i < c; ++i) row[i] = c - 1 - i;
  auto add_node = [&] {
    NodeId id = out.scores.push_row(row);
    out.graph.node_count = out.scores.voters();
    return id;
  };
  std::vector<NodeId> feeders;
  for (int64_t i = 0; i < k; ++i) {
    NodeId v = add_node();
    out.baseline->add(v, Message::single(c, 0, 1));
    feeders.push_back(v);
  }
  const NodeId star1 = add_node();
  const NodeId star2 = add_node();
  for (NodeId v : feeders) out.graph.add_edge(v, star1);
  out.graph.add_edge(star1, star2);
  for (NodeId v = 0; v < n; ++v) out.graph.add_edge(star2, v);
  require_valid(out);
  w.modified = {star1, star2};
  w.inner_nodes = n;
  w.wrapper_seeds = static_cast<int32_t>(k);
  return w;
}

}  // namespace votectl
