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

#include "votectl/evaluate.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <memory>

#include "engine.hpp"
#include "votectl/errors.hpp"

namespace votectl {

std::string mode_name(Mode mode) {
  return mode == Mode::kExact ? "exact" : "mc";
}

Mode parse_mode(const std::string& text) {
  if (text == "exact") return Mode::kExact;
  if (text == "mc" || text == "monte_carlo") return Mode::kMonteCarlo;
  throw InvalidInput("unknown mode: " + text);
}

int default_workers() {
  if (const char* env = std::getenv("VOTECTL_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  return 1;
}

Evaluation Evaluation::of_exact(Rational v) {
  Evaluation e;
  e.mode = Mode::kExact;
  e.exact = std::move(v);
  return e;
}

double Evaluation::value() const {
  return mode == Mode::kExact ? exact.get_d() : estimate;
}

namespace {

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string Evaluation::value_string() const {
  return mode == Mode::kExact ? format_rational(exact) : shortest(estimate);
}

namespace detail {

std::vector<Edge> lookup_addable(const Instance& instance,
                                 std::span<const EdgeKey> keys) {
  if (keys.empty()) return {};
  EdgeDelta d;
  d.additions.assign(keys.begin(), keys.end());
  // Validates membership and disjointness from E.
  std::vector<Edge> all = apply_edge_delta(instance, d);
  return std::vector<Edge>(all.begin() + instance.graph.edges.size(),
                           all.end());
}

// Expectation of value(live, workspace) over the live graphs of the
// support edges.
template <class F>
Evaluation expectation(const Engine& engine, const std::vector<uint8_t>& support,
                       const EvalConfig& config, std::vector<LiveTerm>* terms,
                       F&& value) {
  Measure measure(engine, support, config);
  const int workers = resolve_workers(config.workers);
  std::vector<std::unique_ptr<Workspace>> spaces;
  for (int w = 0; w < std::max(workers, 1); ++w) {
    spaces.push_back(std::make_unique<Workspace>(engine));
  }
  std::vector<int64_t> values(measure.size());
  for_each_outcome(measure, workers,
                   [&](size_t k, const std::vector<uint8_t>& live, size_t,
                       int worker) {
                     values[k] = value(live.data(), *spaces[worker]);
                   });
  Evaluation out;
  if (measure.exact()) {
    Accumulator acc;
    for (size_t k = 0; k < values.size(); ++k) acc.add(measure, k, values[k]);
    out = Evaluation::of_exact(acc.result(measure));
    if (terms) {
      terms->clear();
      for (size_t k = 0; k < values.size(); ++k) {
        terms->push_back({measure.weight(k), values[k]});
      }
    }
    return out;
  }
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (int64_t v : values) sum += static_cast<double>(v);
  const double mean = sum / n;
  double ss = 0.0;
  for (int64_t v : values) {
    double d = static_cast<double>(v) - mean;
    ss += d * d;
  }
  out.mode = Mode::kMonteCarlo;
  out.estimate = mean;
  out.samples = static_cast<int64_t>(values.size());
  out.std_error = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) / std::sqrt(n) : 0.0;
  if (terms) terms->clear();
  return out;
}

// Edge masks describing the compared edge sets over one engine.
struct Frame {
  std::unique_ptr<Engine> engine;
  std::vector<uint8_t> before;  // E
  std::vector<uint8_t> after;   // E after the delta
  std::vector<uint8_t> support; // union of both
};

Frame make_frame(const Instance& instance, const EdgeDelta& delta) {
  // Validate the delta as a whole, including overlaps.
  apply_edge_delta(instance, delta);
  Frame f;
  auto extra = lookup_addable(instance, delta.additions);
  f.engine = std::make_unique<Engine>(instance, extra);
  f.before = f.engine->base_mask();
  f.after = f.before;
  for (const EdgeKey& k : delta.removals) f.after[f.engine->find(k)] = 0;
  for (const EdgeKey& k : delta.additions) f.after[f.engine->find(k)] = 1;
  f.support.assign(f.before.size(), 1);
  return f;
}

const SeedAssignment& baseline_of(const Instance& instance) {
  if (!instance.baseline) {
    throw PreconditionFailed("edge manipulation needs baseline seeds");
  }
  return *instance.baseline;
}

}  // namespace detail

using detail::Frame;
using detail::make_frame;
using detail::Plan;
using detail::Workspace;

Evaluation expected_mov(const Instance& instance,
                        const SeedAssignment& assignment,
                        const EdgeDelta& delta, const EvalConfig& config,
                        std::vector<LiveTerm>* terms) {
  Frame f = make_frame(instance, delta);
  Plan plan = detail::compile(assignment, instance.candidate_count(),
                              instance.node_count());
  return detail::expectation(
      *f.engine, f.after, config, terms,
      [&](const uint8_t* live, Workspace& ws) {
        return ws.evaluate(plan, live, nullptr).mov;
      });
}

Evaluation expected_c0_votes(const Instance& instance,
                             const SeedAssignment& assignment,
                             const EdgeDelta& delta,
                             const EvalConfig& config) {
  Frame f = make_frame(instance, delta);
  Plan plan = detail::compile(assignment, instance.candidate_count(),
                              instance.node_count());
  return detail::expectation(
      *f.engine, f.after, config, nullptr,
      [&](const uint8_t* live, Workspace& ws) {
        return ws.evaluate(plan, live, nullptr).c0_votes;
      });
}

Evaluation delta_mov_seeding(const Instance& instance,
                             const SeedAssignment& assignment,
                             const EvalConfig& config,
                             std::vector<LiveTerm>* terms) {
  if (instance.baseline && !instance.baseline->empty()) {
    throw PreconditionFailed(
        "seeding manipulation expects an instance without baseline seeds");
  }
  Frame f = make_frame(instance, {});
  Plan plan = detail::compile(assignment, instance.candidate_count(),
                              instance.node_count());
  Plan none;
  return detail::expectation(
      *f.engine, f.support, config, terms,
      [&](const uint8_t* live, Workspace& ws) {
        int64_t base = ws.evaluate(none, live, nullptr).mov;
        return ws.evaluate(plan, live, nullptr).mov - base;
      });
}

namespace {

Evaluation coupled_mov(const Instance& instance, const EdgeDelta& delta,
                       const EvalConfig& config, std::vector<LiveTerm>* terms) {
  Plan plan = detail::compile(detail::baseline_of(instance),
                              instance.candidate_count(),
                              instance.node_count());
  Frame f = make_frame(instance, delta);
  return detail::expectation(
      *f.engine, f.support, config, terms,
      [&](const uint8_t* live, Workspace& ws) {
        int64_t before = ws.evaluate(plan, live, f.before.data()).mov;
        return ws.evaluate(plan, live, f.after.data()).mov - before;
      });
}

Evaluation coupled_influence(const Instance& instance, const EdgeDelta& delta,
                             const EvalConfig& config, bool after_minus_before) {
  auto seeds = detail::baseline_of(instance).nodes();
  Frame f = make_frame(instance, delta);
  return detail::expectation(
      *f.engine, f.support, config, nullptr,
      [&](const uint8_t* live, Workspace& ws) {
        int64_t before = ws.chi(seeds, live, f.before.data());
        int64_t after = ws.chi(seeds, live, f.after.data());
        return after_minus_before ? after - before : before - after;
      });
}

}  // namespace

Evaluation delta_mov_edge_removal(const Instance& instance,
                                  std::span<const EdgeKey> removals,
                                  const EvalConfig& config,
                                  std::vector<LiveTerm>* terms) {
  return coupled_mov(
      instance, EdgeDelta::removal({removals.begin(), removals.end()}), config,
      terms);
}

Evaluation delta_mov_edge_addition(const Instance& instance,
                                   std::span<const EdgeKey> additions,
                                   const EvalConfig& config,
                                   std::vector<LiveTerm>* terms) {
  return coupled_mov(
      instance, EdgeDelta::addition({additions.begin(), additions.end()}),
      config, terms);
}

Evaluation expected_influence(const Instance& instance,
                              std::span<const NodeId> seeds,
                              const EdgeDelta& delta,
                              const EvalConfig& config) {
  for (NodeId s : seeds) {
    if (s < 0 || s >= instance.node_count()) {
      throw InvalidInput("seed " + std::to_string(s) + " out of range");
    }
  }
  Frame f = make_frame(instance, delta);
  std::vector<NodeId> list(seeds.begin(), seeds.end());
  return detail::expectation(*f.engine, f.after, config, nullptr,
                             [&](const uint8_t* live, Workspace& ws) {
                               return ws.chi(list, live, nullptr);
                             });
}

Evaluation delta_influence_removal(const Instance& instance,
                                   std::span<const EdgeKey> removals,
                                   const EvalConfig& config) {
  return coupled_influence(
      instance, EdgeDelta::removal({removals.begin(), removals.end()}), config,
      false);
}

Evaluation delta_influence_addition(const Instance& instance,
                                    std::span<const EdgeKey> additions,
                                    const EvalConfig& config) {
  return coupled_influence(
      instance, EdgeDelta::addition({additions.begin(), additions.end()}),
      config, true);
}

}  // namespace votectl
