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

#include "votectl/seedctl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "engine.hpp"
#include "votectl/errors.hpp"

namespace votectl {

using detail::Accumulator;
using detail::Engine;
using detail::Measure;
using detail::Plan;
using detail::Workspace;

namespace {

constexpr uint64_t kSaturated = uint64_t{1} << 63;
constexpr size_t kAlphabetLimit = size_t{1} << 20;
// Entries of the per-outcome state and reach tables of a brute force.
constexpr double kTableLimit = 2e8;

uint64_t sat_add(uint64_t a, uint64_t b) {
  return a >= kSaturated - b ? kSaturated : a + b;
}

uint64_t sat_mul(uint64_t a, uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

EvalConfig with_fallback(const EvalConfig& config) {
  EvalConfig c = config;
  c.monte_carlo_fallback = true;
  return c;
}

struct PlanSums {
  Accumulator mov;
  Accumulator c0;
};

// Sums of MoV and c0 votes of every plan over the measure.
std::vector<PlanSums> evaluate_plans(const Engine& engine,
                                     const Measure& measure,
                                     const std::vector<Plan>& plans,
                                     int workers) {
  const int w = std::max(1, workers);
  std::vector<std::vector<PlanSums>> partial(w, std::vector<PlanSums>(plans.size()));
  std::vector<std::unique_ptr<Workspace>> spaces;
  for (int i = 0; i < w; ++i) spaces.push_back(std::make_unique<Workspace>(engine));
  detail::for_each_outcome(
      measure, w,
      [&](size_t k, const std::vector<uint8_t>& live, size_t, int worker) {
        auto& sums = partial[worker];
        for (size_t p = 0; p < plans.size(); ++p) {
          auto out = spaces[worker]->evaluate(plans[p], live.data(), nullptr);
          sums[p].mov.add(measure, k, out.mov);
          sums[p].c0.add(measure, k, out.c0_votes);
        }
      });
  std::vector<PlanSums> total(plans.size());
  for (const auto& part : partial) {
    for (size_t p = 0; p < plans.size(); ++p) {
      total[p].mov.merge(part[p].mov);
      total[p].c0.merge(part[p].c0);
    }
  }
  return total;
}

void generate_bounded(int32_t candidates, int64_t magnitude, size_t pos,
                      int64_t left, std::vector<int64_t>& cur,
                      MessageAlphabet& out) {
  if (pos + 1 == static_cast<size_t>(candidates)) {
    // The last entry takes whatever is left, with either sign.
    if (left == 0) {
      cur[pos] = 0;
      out.emplace_back(cur);
    } else {
      cur[pos] = -left;
      out.emplace_back(cur);
      cur[pos] = left;
      out.emplace_back(cur);
    }
    cur[pos] = 0;
    return;
  }
  for (int64_t q = -left; q <= left; ++q) {
    cur[pos] = q;
    generate_bounded(candidates, magnitude, pos + 1, left - (q < 0 ? -q : q),
                     cur, out);
  }
  cur[pos] = 0;
}

// Number of integer vectors of the given length and exact magnitude.
uint64_t sphere_size(int32_t length, int64_t magnitude) {
  // ways[l][m]: vectors of length l with magnitude m.
  std::vector<uint64_t> ways(magnitude + 1, 0);
  ways[0] = 1;
  for (int32_t l = 0; l < length; ++l) {
    std::vector<uint64_t> next(magnitude + 1, 0);
    for (int64_t m = 0; m <= magnitude; ++m) {
      if (ways[m] == 0) continue;
      next[m] = sat_add(next[m], ways[m]);
      for (int64_t q = 1; m + q <= magnitude; ++q) {
        next[m + q] = sat_add(next[m + q], sat_mul(ways[m], 2));
      }
    }
    ways.swap(next);
  }
  return ways[magnitude];
}

}  // namespace

MessageAlphabet single_candidate_alphabet(int32_t candidates, int radius) {
  MessageAlphabet out;
  for (CandidateId c = 0; c < candidates; ++c) {
    auto part = fixed_candidate_alphabet(candidates, c, radius);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

MessageAlphabet fixed_candidate_alphabet(int32_t candidates, CandidateId c,
                                         int radius) {
  MessageAlphabet out;
  for (int q = -radius; q <= radius; ++q) {
    if (q != 0) out.push_back(Message::single(candidates, c, q));
  }
  return out;
}

MessageAlphabet bounded_alphabet(int32_t candidates, int64_t radius) {
  uint64_t total = 0;
  for (int64_t m = 1; m <= radius; ++m) {
    total = sat_add(total, sphere_size(candidates, m));
  }
  if (total > kAlphabetLimit) {
    throw CapExceeded("message alphabet size", static_cast<double>(total),
                      static_cast<double>(kAlphabetLimit));
  }
  MessageAlphabet out;
  std::vector<int64_t> cur(candidates, 0);
  for (int64_t m = 1; m <= radius; ++m) {
    generate_bounded(candidates, m, 0, m, cur, out);
  }
  return out;
}

Message m_star(const Instance& instance) {
  return Message::single(instance.candidate_count(), 0,
                         std::max<int64_t>(delta(instance), 1));
}

Rational one_minus_inv_e_lower() { return Rational(632120558, 1000000000); }

Rational theorem4_bound(int64_t budget, int64_t d) {
  if (d < 1 || d > budget) {
    throw PreconditionFailed("the bound needs 1 <= delta <= B");
  }
  Rational r(budget - d + 1, 2 * d * budget);
  r.canonicalize();
  return r * one_minus_inv_e_lower();
}

double theorem4_bound_value(int64_t budget, int64_t d) {
  if (d < 1 || d > budget) {
    throw PreconditionFailed("the bound needs 1 <= delta <= B");
  }
  return static_cast<double>(budget - d + 1) / (2.0 * d * budget) *
         (1.0 - std::exp(-1.0));
}

std::vector<NodeId> greedy_influence_max(const Instance& instance, int k,
                                         const SolverConfig& config) {
  const int32_t n = instance.node_count();
  if (k < 0 || k > n) {
    throw PreconditionFailed("k must lie between 0 and the node count");
  }
  Engine engine(instance, {});
  Measure measure(engine, engine.base_mask(), with_fallback(config.eval));
  const int workers = std::max(1, detail::resolve_workers(config.eval.workers));
  const size_t outcomes = measure.size();
  std::vector<uint8_t> covered(outcomes * n, 0);
  std::vector<uint8_t> chosen(n, 0);
  std::vector<NodeId> seeds;
  std::vector<std::unique_ptr<Workspace>> spaces;
  for (int i = 0; i < workers; ++i) spaces.push_back(std::make_unique<Workspace>(engine));
  std::vector<std::vector<NodeId>> scratch(workers);
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<Accumulator>> gains(workers,
                                                std::vector<Accumulator>(n));
    detail::for_each_outcome(
        measure, workers,
        [&](size_t o, const std::vector<uint8_t>& live, size_t, int w) {
          const uint8_t* cov = covered.data() + o * n;
          for (NodeId v = 0; v < n; ++v) {
            if (chosen[v]) continue;
            scratch[w].clear();
            spaces[w]->reach(v, live.data(), nullptr, scratch[w]);
            int64_t fresh = 0;
            for (NodeId u : scratch[w]) fresh += cov[u] ? 0 : 1;
            gains[w][v].add(measure, o, fresh);
          }
        });
    NodeId best = -1;
    Accumulator best_gain;
    for (NodeId v = 0; v < n; ++v) {
      if (chosen[v]) continue;
      Accumulator g;
      for (int w = 0; w < workers; ++w) g.merge(gains[w][v]);
      if (best < 0 || g.compare(best_gain) > 0) {
        best = v;
        best_gain = g;
      }
    }
    chosen[best] = 1;
    seeds.push_back(best);
    detail::for_each_outcome(
        measure, workers,
        [&](size_t o, const std::vector<uint8_t>& live, size_t, int w) {
          scratch[w].clear();
          spaces[w]->reach(best, live.data(), nullptr, scratch[w]);
          for (NodeId u : scratch[w]) covered[o * n + u] = 1;
        });
  }
  return seeds;
}

SeedingPlan greedy_ecs_theorem4(const Instance& instance, int64_t budget,
                                const SolverConfig& config) {
  if (budget < 0) throw InvalidInput("negative budget");
  SeedingPlan plan;
  plan.solver = "theorem4";
  plan.budget = Budget::of(budget);
  EvalConfig eval = with_fallback(config.eval);
  if (budget == 0) {
    plan.value = delta_mov_seeding(instance, plan.assignment, eval);
    return plan;
  }
  const int64_t d = delta(instance);
  if (d > budget) throw HardToManipulate(budget, d);
  const Message star = m_star(instance);
  const int64_t k = std::min<int64_t>(budget / star.magnitude(),
                                      instance.node_count());
  SolverConfig c = config;
  c.eval = eval;
  for (NodeId s : greedy_influence_max(instance, static_cast<int>(k), c)) {
    plan.assignment.add(s, star);
  }
  plan.value = delta_mov_seeding(instance, plan.assignment, eval);
  return plan;
}

SelectionRule default_selection_rule() {
  return [](std::span<const Augmentation> options) {
    size_t best = 0;
    for (size_t i = 1; i < options.size(); ++i) {
      const auto& a = options[i];
      const auto& b = options[best];
      int c = cmp(a.mov_gain, b.mov_gain);
      if (c == 0) c = cmp(a.c0_gain, b.c0_gain);
      if (c == 0 && a.node != b.node) c = a.node < b.node ? 1 : -1;
      if (c == 0 && a.cost != b.cost) c = a.cost < b.cost ? 1 : -1;
      if (c == 0 && a.message_index != b.message_index) {
        c = a.message_index < b.message_index ? 1 : -1;
      }
      if (c > 0) best = i;
    }
    return best;
  };
}

namespace {

struct FamilyContext {
  explicit FamilyContext(const Instance& instance, const SolverConfig& config)
      : engine(instance, {}),
        measure(engine, engine.base_mask(), config.eval),
        workers(detail::resolve_workers(config.eval.workers)) {}
  Engine engine;
  Measure measure;
  int workers;
};

std::vector<Augmentation> scan(const Instance& instance, FamilyContext& ctx,
                               const SeedAssignment& current, int64_t budget,
                               const MessageAlphabet& alphabet) {
  const int32_t n = instance.node_count();
  const int32_t c = instance.candidate_count();
  const int64_t spent = current.cost();
  std::vector<Plan> plans;
  std::vector<Augmentation> meta;
  plans.push_back(detail::compile(current, c, n));
  for (NodeId s = 0; s < n; ++s) {
    if (current.contains(s)) continue;
    for (size_t a = 0; a < alphabet.size(); ++a) {
      const int64_t cost = alphabet[a].magnitude();
      if (cost < 1 || spent + cost > budget) continue;
      SeedAssignment next = current;
      next.add(s, alphabet[a]);
      plans.push_back(detail::compile(next, c, n));
      Augmentation aug;
      aug.node = s;
      aug.message_index = a;
      aug.cost = cost;
      meta.push_back(aug);
    }
  }
  auto sums = evaluate_plans(ctx.engine, ctx.measure, plans, ctx.workers);
  std::vector<Augmentation> out;
  for (size_t i = 0; i < meta.size(); ++i) {
    const auto& s = sums[i + 1];
    if (s.mov.compare(sums[0].mov) > 0 || s.c0.compare(sums[0].c0) > 0) {
      Augmentation aug = meta[i];
      aug.mov_gain = s.mov.result(ctx.measure) - sums[0].mov.result(ctx.measure);
      aug.c0_gain = s.c0.result(ctx.measure) - sums[0].c0.result(ctx.measure);
      out.push_back(std::move(aug));
    }
  }
  return out;
}

}  // namespace

std::vector<Augmentation> augmentations(const Instance& instance,
                                        const SeedAssignment& current,
                                        int64_t budget,
                                        const MessageAlphabet& alphabet,
                                        const SolverConfig& config) {
  FamilyContext ctx(instance, config);
  return scan(instance, ctx, current, budget, alphabet);
}

SeedingPlan greedy_family(const Instance& instance, int64_t budget,
                          const MessageAlphabet& alphabet,
                          const SelectionRule& rule,
                          const SolverConfig& config,
                          std::vector<Augmentation>* trace) {
  if (budget < 0) throw InvalidInput("negative budget");
  FamilyContext ctx(instance, config);
  SeedingPlan plan;
  plan.solver = "greedy-family";
  plan.budget = Budget::of(budget);
  if (trace) trace->clear();
  while (true) {
    auto options = scan(instance, ctx, plan.assignment, budget, alphabet);
    if (options.empty()) break;
    const Augmentation& pick = options[rule(options)];
    plan.assignment.add(pick.node, alphabet[pick.message_index]);
    if (trace) trace->push_back(pick);
  }
  plan.value = delta_mov_seeding(instance, plan.assignment, config.eval);
  return plan;
}

uint64_t ecs_search_size(int32_t nodes, const MessageAlphabet& alphabet,
                         int64_t budget) {
  std::vector<uint64_t> by_cost(budget + 1, 0);
  for (const auto& m : alphabet) {
    int64_t c = m.magnitude();
    if (c >= 1 && c <= budget) ++by_cost[c];
  }
  // f[b]: plans over the remaining nodes with budget b.
  std::vector<uint64_t> f(budget + 1, 1);
  for (int32_t i = 0; i < nodes; ++i) {
    std::vector<uint64_t> g(budget + 1, 0);
    for (int64_t b = 0; b <= budget; ++b) {
      uint64_t total = f[b];
      for (int64_t c = 1; c <= b; ++c) {
        if (by_cost[c]) total = sat_add(total, sat_mul(by_cost[c], f[b - c]));
      }
      g[b] = total;
    }
    f.swap(g);
  }
  return f[budget];
}

namespace {

// Depth-first plan search with incremental per-outcome state.
class EcsSearch {
 public:
  EcsSearch(const Engine& engine, const Measure& measure,
            const std::vector<std::vector<std::vector<NodeId>>>& reach,
            const MessageAlphabet& alphabet)
      : engine_(engine),
        measure_(measure),
        reach_(reach),
        alphabet_(alphabet),
        n_(engine.nodes()),
        c_(engine.candidates()),
        k_(measure.size()),
        received_(k_ * n_ * c_, 0),
        vote_(k_ * n_),
        counts_(k_ * c_),
        pin_(n_, -1) {
    for (size_t k = 0; k < k_; ++k) {
      for (NodeId v = 0; v < n_; ++v) vote_[k * n_ + v] = engine.initial_vote(v);
      for (CandidateId i = 0; i < c_; ++i) {
        counts_[k * c_ + i] = engine.initial_votes()[i];
      }
    }
    for (const auto& m : alphabet) cost_.push_back(m.magnitude());
  }

  Accumulator value() const {
    Accumulator acc;
    for (size_t k = 0; k < k_; ++k) {
      acc.add(measure_, k, margin_of_victory(std::span<const int64_t>(
                               counts_.data() + k * c_, c_)));
    }
    return acc;
  }

  // Explores every plan whose lowest seed is `first`.
  void run_from(NodeId first, int64_t budget) {
    for (size_t a = 0; a < alphabet_.size(); ++a) {
      if (cost_[a] > budget) continue;
      push(first, a);
      visit();
      descend(first + 1, budget - cost_[a]);
      pop(first, a);
    }
  }

  bool found() const { return found_; }
  const Accumulator& best() const { return best_; }
  const std::vector<std::pair<NodeId, size_t>>& best_plan() const {
    return best_plan_;
  }

 private:
  void descend(NodeId start, int64_t budget) {
    for (NodeId s = start; s < n_; ++s) {
      for (size_t a = 0; a < alphabet_.size(); ++a) {
        if (cost_[a] > budget) continue;
        push(s, a);
        visit();
        descend(s + 1, budget - cost_[a]);
        pop(s, a);
      }
    }
  }

  void visit() {
    Accumulator v = value();
    if (!found_ || v.compare(best_) > 0) {
      found_ = true;
      best_ = v;
      best_plan_ = stack_;
    }
  }

  void refresh(size_t k, NodeId v) {
    CandidateId now = engine_.bribed() && pin_[v] >= 0
                          ? pin_[v]
                          : engine_.vote(v, received_.data() + (k * n_ + v) * c_);
    CandidateId& was = vote_[k * n_ + v];
    if (now != was) {
      --counts_[k * c_ + was];
      ++counts_[k * c_ + now];
      was = now;
    }
  }

  void apply(NodeId s, size_t a, int64_t sign) {
    const auto& news = alphabet_[a].news;
    for (size_t k = 0; k < k_; ++k) {
      for (NodeId v : reach_[k][s]) {
        int64_t* row = received_.data() + (k * n_ + v) * c_;
        for (CandidateId i = 0; i < c_; ++i) row[i] += sign * news[i];
        refresh(k, v);
      }
    }
  }

  void push(NodeId s, size_t a) {
    if (engine_.bribed()) pin_[s] = 0;
    apply(s, a, +1);
    stack_.push_back({s, a});
  }

  void pop(NodeId s, size_t a) {
    stack_.pop_back();
    if (engine_.bribed()) pin_[s] = -1;
    apply(s, a, -1);
  }

  const Engine& engine_;
  const Measure& measure_;
  const std::vector<std::vector<std::vector<NodeId>>>& reach_;
  const MessageAlphabet& alphabet_;
  std::vector<int64_t> cost_;
  int32_t n_;
  int32_t c_;
  size_t k_;
  std::vector<int64_t> received_;
  std::vector<CandidateId> vote_;
  std::vector<int64_t> counts_;
  std::vector<CandidateId> pin_;
  std::vector<std::pair<NodeId, size_t>> stack_;
  bool found_ = false;
  Accumulator best_;
  std::vector<std::pair<NodeId, size_t>> best_plan_;
};

}  // namespace

SeedingPlan brute_force_ecs(const Instance& instance, int64_t budget,
                            const MessageAlphabet& alphabet,
                            const SolverConfig& config) {
  if (budget < 0) throw InvalidInput("negative budget");
  const int32_t n = instance.node_count();
  const int32_t c = instance.candidate_count();
  for (const auto& m : alphabet) {
    if (static_cast<int32_t>(m.news.size()) != c) {
      throw InvalidInput("alphabet message length does not match candidates");
    }
  }
  const uint64_t plans = ecs_search_size(n, alphabet, budget);
  if (plans > config.search_cap) {
    throw CapExceeded("seeding plans to search", static_cast<double>(plans),
                      static_cast<double>(config.search_cap));
  }
  EvalConfig eval = config.eval;
  eval.mode = Mode::kExact;
  eval.monte_carlo_fallback = false;
  Engine engine(instance, {});
  Measure measure(engine, engine.base_mask(), eval);
  const size_t outcomes = measure.size();
  if (static_cast<double>(outcomes) * n * (c + n) > kTableLimit) {
    throw CapExceeded("brute-force state table entries",
                      static_cast<double>(outcomes) * n * (c + n), kTableLimit);
  }
  std::vector<std::vector<std::vector<NodeId>>> reach(
      outcomes, std::vector<std::vector<NodeId>>(n));
  {
    Workspace ws(engine);
    std::vector<uint8_t> live;
    for (size_t k = 0; k < outcomes; ++k) {
      measure.fill(k, live);
      for (NodeId v = 0; v < n; ++v) ws.reach(v, live.data(), nullptr, reach[k][v]);
    }
  }
  const int workers = detail::resolve_workers(eval.workers);
  std::vector<std::unique_ptr<EcsSearch>> branches(n);
  detail::parallel_for(static_cast<size_t>(n), workers, [&](size_t s, int) {
    branches[s] = std::make_unique<EcsSearch>(engine, measure, reach, alphabet);
    branches[s]->run_from(static_cast<NodeId>(s), budget);
  });
  EcsSearch root(engine, measure, reach, alphabet);
  Accumulator best = root.value();
  std::vector<std::pair<NodeId, size_t>> best_plan;
  for (const auto& b : branches) {
    if (b->found() && b->best().compare(best) > 0) {
      best = b->best();
      best_plan = b->best_plan();
    }
  }
  SeedingPlan plan;
  plan.solver = "brute-force-ecs";
  plan.budget = Budget::of(budget);
  for (const auto& [s, a] : best_plan) plan.assignment.add(s, alphabet[a]);
  plan.value = delta_mov_seeding(instance, plan.assignment, eval);
  return plan;
}

SeedingPlan brute_force_ecs(const Instance& instance, int64_t budget,
                            const SolverConfig& config) {
  return brute_force_ecs(
      instance, budget, bounded_alphabet(instance.candidate_count(), budget),
      config);
}

}  // namespace votectl
