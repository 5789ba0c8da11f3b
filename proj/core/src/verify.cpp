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

#include "votectl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "reference.hpp"
#include "votectl/diffusion.hpp"
#include "votectl/edgectl.hpp"
#include "votectl/errors.hpp"
#include "votectl/evaluate.hpp"
#include "votectl/gadgets.hpp"
#include "votectl/random_instances.hpp"
#include "votectl/seedctl.hpp"
#include "votectl/sources.hpp"

namespace votectl {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

namespace {

std::string str(const Rational& r) { return r.get_str(); }
std::string str(int64_t v) { return std::to_string(v); }

std::string join(const std::vector<int64_t>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::string ratio(int64_t good, int64_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

void add(SuiteReport& r, std::string name, std::string expected, std::string got,
         bool pass) {
  r.checks.push_back({std::move(name), std::move(expected), std::move(got), pass});
}

SolverConfig solver_config(const VerifyOptions& o) {
  SolverConfig cfg;
  cfg.eval.mode = Mode::kExact;
  cfg.eval.workers = o.workers;
  cfg.eval.seed = o.seed;
  return cfg;
}

int64_t budget_of(const Instance& inst) { return inst.budget->limit.value(); }

std::string sets_label(const SetSystem& s) {
  std::ostringstream os;
  os << "n=" << s.n << " {";
  for (size_t i = 0; i < s.sets.size(); ++i) {
    if (i > 0) os << ' ';
    for (int32_t e : s.sets[i]) os << e;
  }
  os << "} h=" << s.h;
  return os.str();
}

std::vector<int64_t> term_values(const std::vector<LiveTerm>& terms) {
  std::vector<int64_t> v;
  for (const auto& t : terms) v.push_back(t.value);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// ---------------------------------------------------------------------------

void example2(SuiteReport& r, const VerifyOptions& o) {
  const Instance inst = example2_diamond();
  std::vector<LiveTerm> terms;
  const Evaluation ev =
      expected_mov(inst, *inst.baseline, {}, solver_config(o).eval, &terms);
  std::vector<int64_t> values;
  for (const auto& t : terms) values.push_back(t.value);
  std::sort(values.begin(), values.end());
  add(r, "example2 MoV per live graph", "0,2", join(values),
      values == std::vector<int64_t>{0, 2});
  add(r, "example2 expected MoV", "1", str(ev.exact), ev.exact == 1);
  const Rational ref = reference::expected_mov(
      reference::outcomes(inst, inst.graph.edges, *inst.baseline));
  add(r, "example2 reference evaluator", "1", str(ref), ref == 1);
}

void example1(SuiteReport& r, const VerifyOptions& o) {
  const Instance inst = example1_clique();
  const SolverConfig cfg = solver_config(o);
  const int64_t budget = budget_of(inst);
  const Rational initial = expected_mov(inst, SeedAssignment(), {}, cfg.eval).exact;
  Rational best = std::numeric_limits<int64_t>::min();
  for (CandidateId c = 0; c < inst.candidate_count(); ++c) {
    const SeedingPlan plan = brute_force_ecs(
        inst, budget, fixed_candidate_alphabet(inst.candidate_count(), c, 2), cfg);
    const Rational final_mov = initial + plan.value.exact;
    add(r, "example1 best final MoV, news on c" + std::to_string(c) + " only",
        "<= 0", str(final_mov), final_mov <= 0);
    best = std::max(best, final_mov);
  }
  add(r, "example1 best final MoV, single-candidate plans", "<= 0", str(best),
      best <= 0);

  const SeedAssignment mixed = example1_mixed_plan();
  const auto outs = reference::outcomes(inst, inst.graph.edges, mixed);
  const auto& votes = outs.front().votes;
  const int64_t rival = *std::max_element(votes.begin() + 1, votes.end());
  add(r, "example1 mixed plan votes", "c0 has 2, every rival <= 1", join(votes),
      votes[0] == 2 && rival <= 1);
  const Rational mov = expected_mov(inst, mixed, {}, cfg.eval).exact;
  add(r, "example1 mixed plan final MoV", "1", str(mov), mov == 1);
}

void examples(SuiteReport& r, const VerifyOptions& o) {
  example1(r, o);
  example2(r, o);
}

void prop1(SuiteReport& r, const VerifyOptions& o) {
  const Instance inst = prop1_greedy_trap();
  const SolverConfig cfg = solver_config(o);
  const int64_t budget = budget_of(inst);
  const int32_t c = inst.candidate_count();
  const SeedingPlan greedy =
      greedy_family(inst, budget, single_candidate_alphabet(c, cfg.alphabet_radius),
                    default_selection_rule(), cfg);
  add(r, "prop1 greedy value", "0", str(greedy.value.exact), greedy.value.exact == 0);
  const auto first = augmentations(inst, SeedAssignment(), budget,
                                   bounded_alphabet(c, budget), cfg);
  add(r, "prop1 improving first steps, any message", "0", str(first.size()),
      first.empty());
  const SeedingPlan best = brute_force_ecs(inst, budget, cfg);
  add(r, "prop1 brute-force optimum", "1", str(best.value.exact), best.value.exact == 1);
  const Rational witness = delta_mov_seeding(inst, prop1_optimal_plan(), cfg.eval).exact;
  add(r, "prop1 optimal plan value", "1", str(witness), witness == 1);
}

void prop2(SuiteReport& r, const VerifyOptions& o) {
  const int32_t rr = 3;
  const Instance inst = prop2_tree_trap(rr);
  const SolverConfig cfg = solver_config(o);
  const int64_t budget = budget_of(inst);
  add(r, "prop2 node count", str(19 * rr), str(inst.node_count()),
      inst.node_count() == 19 * rr);
  const SeedingPlan greedy = greedy_family(
      inst, budget, single_candidate_alphabet(inst.candidate_count(), cfg.alphabet_radius),
      default_selection_rule(), cfg);
  add(r, "prop2 greedy value", "2", str(greedy.value.exact), greedy.value.exact == 2);
  const SeedingPlan best = brute_force_ecs(inst, budget, cfg);
  add(r, "prop2 brute-force optimum", str(rr), str(best.value.exact),
      best.value.exact == rr);
  const Rational witness =
      delta_mov_seeding(inst, prop2_optimal_plan(rr), cfg.eval).exact;
  add(r, "prop2 optimal plan value", str(rr), str(witness), witness == rr);
}

void thm4_bound(SuiteReport& r, const VerifyOptions& o) {
  const SolverConfig cfg = solver_config(o);
  Rng rng = derive_rng(o.seed, 5);
  const int cases = 200;
  int violations = 0;
  for (int i = 0; i < cases; ++i) {
    const BudgetedInstance c = random_theorem4_case(rng, cfg.search_cap);
    const SeedingPlan greedy = greedy_ecs_theorem4(c.instance, c.budget, cfg);
    const SeedingPlan best = brute_force_ecs(c.instance, c.budget, cfg);
    const Rational rho = theorem4_bound(c.budget, delta(c.instance));
    const Rational floor = rho * best.value.exact;
    if (greedy.value.mode != Mode::kExact || greedy.value.exact < floor) {
      ++violations;
      std::ostringstream name;
      name << "case " << i << " (n=" << c.instance.node_count()
           << " B=" << c.budget << " delta=" << delta(c.instance)
           << " opt=" << str(best.value.exact) << ")";
      add(r, name.str(), ">= " + str(floor), str(greedy.value.exact), false);
    }
  }
  add(r, "bound violations over " + std::to_string(cases) + " cases", "0",
      std::to_string(violations), violations == 0);
}

struct LabeledSets {
  SetSystem sets;
  bool yes;
};

void check_label(SuiteReport& r, const std::string& tag, const LabeledSets& c) {
  const auto cover = min_set_cover(c.sets);
  const bool yes = cover && *cover == c.sets.h;
  const bool no = !set_cover_satisfiable(c.sets);
  add(r, tag + " source label " + sets_label(c.sets), c.yes ? "YES" : "NO",
      yes ? "YES" : (no ? "NO" : "min cover below h"), c.yes ? yes : no);
}

void gadgets_iff(SuiteReport& r, const VerifyOptions& o) {
  const SolverConfig cfg = solver_config(o);
  const EvalConfig& exact = cfg.eval;

  const std::vector<LabeledSets> ecs_battery{
      {{3, {{1, 2}, {2, 3}, {1, 3}}, 2}, true},
      {{3, {{1, 2, 3}, {1}, {2}}, 1}, true},
      {{2, {{1}, {2}, {1, 2}}, 1}, true},
      {{3, {{1, 2}, {3}, {1}}, 2}, true},
      {{4, {{1, 2}, {3, 4}, {1, 3}}, 2}, true},
      {{2, {{1}, {2}}, 2}, true},
      {{3, {{1, 2}, {2, 3}, {1, 3}}, 1}, false},
      {{3, {{1, 2}, {3}, {1}}, 1}, false},
      {{4, {{1, 2}, {3, 4}, {1, 3}}, 1}, false},
      {{2, {{1}, {2}}, 1}, false},
      {{3, {{1}, {2}, {3}}, 2}, false},
      {{3, {{1, 2}, {2}}, 2}, false},
  };
  for (const auto& c : ecs_battery) {
    check_label(r, "seeding", c);
    const Instance inst = setcover_ecs(c.sets);
    const Rational v = brute_force_ecs(inst, budget_of(inst), cfg).value.exact;
    add(r, "seeding optimum " + sets_label(c.sets), c.yes ? "1" : "<= 0", str(v),
        c.yes ? v == 1 : v <= 0);
  }

  const std::vector<std::pair<std::string, SimpleGraph>> graphs{
      {"P3 center 1", {3, {{0, 1}, {1, 2}}}},
      {"P3 center 0", {3, {{0, 1}, {0, 2}}}},
      {"P3 center 2", {3, {{0, 2}, {1, 2}}}},
      {"K3", {3, {{0, 1}, {0, 2}, {1, 2}}}},
      {"2K2 01 23", {4, {{0, 1}, {2, 3}}}},
      {"2K2 02 13", {4, {{0, 2}, {1, 3}}}},
      {"2K2 03 12", {4, {{0, 3}, {1, 2}}}},
      {"P3+K1", {4, {{0, 1}, {1, 2}}}},
  };
  for (const auto& [label, g] : graphs) {
    const Instance inst = independent_set_ecer(g);
    const Rational v = brute_force_ecer(inst, Budget::unlimited(), cfg).value.exact;
    const int32_t mis = max_independent_set(g);
    add(r, "independent-set removal optimum " + label, str(mis), str(v), v == mis);
  }

  const std::vector<LabeledSets> multi_battery{
      {{3, {{1, 2, 3}}, 1}, true},
      {{3, {{1, 2}, {2, 3}}, 2}, true},
      {{3, {{1, 2}, {3}}, 2}, true},
      {{3, {{1, 3}, {2}}, 2}, true},
      {{2, {{1, 2}}, 1}, true},
      {{3, {{1, 2}, {3}}, 1}, false},
      {{3, {{1}, {2, 3}}, 1}, false},
      {{3, {{1}, {2}}, 2}, false},
      {{2, {{1}}, 1}, false},
      {{3, {{1, 2}}, 1}, false},
  };
  for (const auto& c : multi_battery) {
    check_label(r, "multi-article", c);
    const int64_t n2 = static_cast<int64_t>(c.sets.n) * c.sets.n;
    const std::vector<int64_t> yes_terms{-2 * n2 + 2, 2 * n2};
    for (EdgeKind kind : {EdgeKind::kRemoval, EdgeKind::kAddition}) {
      const bool removal = kind == EdgeKind::kRemoval;
      const Instance inst = removal ? setcover_ecer(c.sets) : setcover_ecea_multi(c.sets);
      const EdgePlan plan = removal ? brute_force_ecer(inst, Budget::unlimited(), cfg)
                                    : brute_force_ecea(inst, Budget::unlimited(), cfg);
      const std::string tag = std::string(removal ? "removal" : "addition") +
                              " optimum " + sets_label(c.sets);
      const Rational v = plan.value.exact;
      add(r, tag, c.yes ? "1" : "<= 0", str(v), c.yes ? v == 1 : v <= 0);
      if (c.yes) {
        std::vector<LiveTerm> terms;
        if (removal) {
          delta_mov_edge_removal(inst, plan.edges, exact, &terms);
        } else {
          delta_mov_edge_addition(inst, plan.edges, exact, &terms);
        }
        const auto got = term_values(terms);
        add(r, tag + " per live graph", join(yes_terms), join(got), got == yes_terms);
      }
    }
  }

  const std::vector<LabeledSets> single_battery{
      {{3, {{1, 2, 3}}, 1}, true},
      {{3, {{1, 2}, {2, 3}}, 2}, true},
      {{3, {{1, 2}, {3}}, 2}, true},
      {{3, {{1, 3}, {2}}, 2}, true},
      {{2, {{1}, {2}}, 2}, true},
      {{3, {{1, 2}, {3}}, 1}, false},
      {{3, {{1}, {2, 3}}, 1}, false},
      {{3, {{1}, {2}}, 2}, false},
      {{3, {{1, 2}}, 1}, false},
      {{2, {{1}, {2}}, 1}, false},
  };
  for (const auto& c : single_battery) {
    check_label(r, "single-article", c);
    const Instance inst = setcover_ecea_single(c.sets);
    const Rational v = brute_force_ecea(inst, Budget::unlimited(), cfg).value.exact;
    add(r, "single-article addition optimum " + sets_label(c.sets),
        c.yes ? "1" : "0", str(v), v == (c.yes ? 1 : 0));
  }
}

void dks(SuiteReport& r, const VerifyOptions& o) {
  const EvalConfig exact = solver_config(o).eval;
  Rng rng = derive_rng(o.seed, 7);
  for (int i = 0; i < 20; ++i) {
    const SimpleGraph g = random_graph(rng, 5, 0.5);
    const Instance inst = dks_ecs(g, g.n);
    int good = 0;
    for (uint32_t mask = 0; mask < (1u << g.n); ++mask) {
      std::vector<int32_t> subset;
      for (int32_t v = 0; v < g.n; ++v) {
        if (mask >> v & 1) subset.push_back(v);
      }
      const Rational d = delta_mov_seeding(inst, dks_seeding(g, subset), exact).exact;
      good += d == 2 * internal_edges(g, subset);
    }
    add(r, "graph " + std::to_string(i) + " with " + str(g.edges.size()) +
               " edges, seeding = 2 x internal edges",
        ratio(32, 32), ratio(good, 32), good == 32);
  }
}

void unlimited_edges(SuiteReport& r, const VerifyOptions& o) {
  const SolverConfig cfg = solver_config(o);
  Rng rng = derive_rng(o.seed, 8);
  const int cases = 100;
  int removal_ok = 0;
  int addition_ok = 0;
  for (int i = 0; i < cases; ++i) {
    const Instance inst = random_single_article_instance(rng, 8, 12, 10);
    const EdgePlan closed = unlimited_ecer_single(inst, cfg.eval);
    const EdgePlan best = brute_force_ecer(inst, Budget::unlimited(), cfg);
    if (closed.value.exact == best.value.exact) {
      ++removal_ok;
    } else {
      add(r, "removal case " + std::to_string(i), str(best.value.exact),
          str(closed.value.exact), false);
    }
  }
  for (int i = 0; i < cases; ++i) {
    const Instance inst = random_single_article_instance(rng, 8, 12, 10);
    const EdgePlan closed = unlimited_ecea_single(inst, cfg.eval);
    const EdgePlan best = brute_force_ecea(inst, Budget::unlimited(), cfg);
    if (closed.value.exact == best.value.exact) {
      ++addition_ok;
    } else {
      add(r, "addition case " + std::to_string(i), str(best.value.exact),
          str(closed.value.exact), false);
    }
  }
  add(r, "closed-form removal matches brute force", ratio(cases, cases),
      ratio(removal_ok, cases), removal_ok == cases);
  add(r, "closed-form addition matches brute force", ratio(cases, cases),
      ratio(addition_ok, cases), addition_ok == cases);
}

void imer(SuiteReport& r, const VerifyOptions& o) {
  const SolverConfig cfg = solver_config(o);
  const std::vector<std::pair<MsiInput, int32_t>> cases{
      {{3, {{1, 2}, {2, 3}, {1, 3}}, 2}, 4},
      {{4, {{1, 2, 3}, {2, 3, 4}, {1, 4}, {2, 3}}, 2}, 2},
      {{4, {{1, 2}, {2, 3}, {3, 4}}, 1}, 2},
  };
  for (const auto& [m, rep] : cases) {
    const Instance inst = msi_imer(m, rep);
    const Rational v = brute_force_imer(inst, *inst.budget, cfg).value.exact;
    const int64_t want = m.g() - m.h + static_cast<int64_t>(msi_opt(m)) * rep;
    add(r, "influence removal optimum " + sets_label(m) + " R=" + str(rep),
        str(want), str(v), v == want);
  }

  const Instance companion = msi_imer(cases.front().first, cases.front().second, true);
  const auto& edges = companion.graph.edges;
  const uint64_t subsets = uint64_t{1} << edges.size();
  uint64_t good = 0;
  for (uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<EdgeKey> removals;
    for (size_t b = 0; b < edges.size(); ++b) {
      if (mask >> b & 1) removals.push_back(edges[b].key());
    }
    const Rational dm = delta_mov_edge_removal(companion, removals, cfg.eval).exact;
    const Rational di = delta_influence_removal(companion, removals, cfg.eval).exact;
    good += dm == 2 * di;
  }
  add(r, "companion MoV gain = 2 x influence drop over all " + str(edges.size()) +
             "-edge removal subsets",
      std::to_string(subsets), std::to_string(good), good == subsets);
}

Instance reopt_inner_removal() {
  Instance in;
  in.name = "reopt-inner-removal";
  in.scores = ScoreProfile(0, 2);
  for (auto row : {std::vector<int64_t>{1, 0}, {1, 0}, {0, 1}}) in.scores.push_row(row);
  in.graph.node_count = 3;
  in.graph.add_edge(0, 1, Rational(1, 2));
  in.graph.add_edge(1, 2);
  in.baseline = SeedAssignment();
  in.baseline->add(0, Message({-1, 0}));
  in.budget = Budget::unlimited();
  require_valid(in);
  return in;
}

Instance reopt_inner_addition() {
  Instance in;
  in.name = "reopt-inner-addition";
  in.scores = ScoreProfile(0, 2);
  for (auto row : {std::vector<int64_t>{1, 0}, {0, 1}, {0, 1}}) in.scores.push_row(row);
  in.graph.node_count = 3;
  in.graph.add_edge(1, 2, Rational(1, 2));
  in.graph.addable = std::vector<Edge>{{0, 1, 1}, {0, 2, Rational(1, 3)}};
  in.baseline = SeedAssignment();
  in.baseline->add(0, Message({1, 0}));
  in.budget = Budget::of(1);
  require_valid(in);
  return in;
}

void reopt_suite(SuiteReport& r, const VerifyOptions& o) {
  const SolverConfig cfg = solver_config(o);
  for (EdgeKind kind : {EdgeKind::kRemoval, EdgeKind::kAddition}) {
    const Instance inner =
        kind == EdgeKind::kRemoval ? reopt_inner_removal() : reopt_inner_addition();
    const Budget budget = *inner.budget;
    const EdgeSolverFn solver = [&](const Instance& x) {
      return brute_force_edges(x, kind, EdgeObjective::kMov, budget, cfg);
    };
    const WrappedInstance w = reopt_wrapper(inner);
    const std::string tag = edge_kind_name(kind);
    const EdgePlan pre = solver(w.instance);
    add(r, tag + " wrapper optimum before the change", "empty plan, value 0",
        str(pre.edges.size()) + " edges, value " + str(pre.value.exact),
        pre.edges.empty() && pre.value.exact == 0);
    const EdgePlan inner_best = solver(inner);
    const auto after = reopt(w.instance, pre, w.modified, Rational(0), solver, cfg.eval);
    add(r, tag + " wrapper optimum after the change", str(inner_best.value.exact),
        str(after.solution.value.exact),
        after.solution.value.exact == inner_best.value.exact);
    add(r, tag + " inner optimum is nontrivial", "> 0", str(inner_best.value.exact),
        inner_best.value.exact > 0);
  }
}

// Gadget instances with a plan each, for the property checks.
struct GadgetCase {
  std::string name;
  Instance instance;
  SeedAssignment assignment;
  EdgeDelta delta;
};

std::vector<GadgetCase> gadget_cases() {
  std::vector<GadgetCase> out;
  auto seeded = [&](std::string name, Instance inst, SeedAssignment plan) {
    out.push_back({name + " (no plan)", inst, SeedAssignment(), {}});
    out.push_back({std::move(name), std::move(inst), std::move(plan), {}});
  };
  auto edged = [&](std::string name, Instance inst, EdgeDelta delta) {
    SeedAssignment base = *inst.baseline;
    out.push_back({name + " (no plan)", inst, base, {}});
    out.push_back({std::move(name), std::move(inst), std::move(base), std::move(delta)});
  };
  const Instance e2 = example2_diamond();
  out.push_back({"example2", e2, *e2.baseline, {}});
  seeded("example1", example1_clique(), example1_mixed_plan());
  const SetCover sc{3, {{1, 2}, {2, 3}, {1, 3}}, 2};
  seeded("setcover seeding", setcover_ecs(sc), setcover_ecs_witness(sc, {0, 1}));
  seeded("prop1", prop1_greedy_trap(), prop1_optimal_plan());
  seeded("prop2", prop2_tree_trap(3), prop2_optimal_plan(3));
  const PartitionInput pm{{1, 1, 2, 2}, 2};
  seeded("partition", partition_line(pm), partition_seeding(pm, {2, 3}));
  const SimpleGraph paw{4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}};
  seeded("dks", dks_ecs(paw, 3), dks_seeding(paw, {0, 1, 2}));
  const MsiInput msi{3, {{1, 2}, {2, 3}, {1, 3}}, 2};
  edged("msi removal", msi_imer(msi, 2),
        EdgeDelta::removal(msi_imer_witness(msi, find_msi(msi))));
  edged("msi companion", msi_imer(msi, 2, true),
        EdgeDelta::removal(msi_imer_witness(msi, find_msi(msi))));
  const SimpleGraph p3{3, {{0, 1}, {1, 2}}};
  edged("independent set", independent_set_ecer(p3),
        EdgeDelta::removal(
            independent_set_ecer_witness(p3, find_max_independent_set(p3))));
  const SetCover sc2{3, {{1, 2}, {2, 3}}, 2};
  edged("setcover removal", setcover_ecer(sc2),
        EdgeDelta::removal(setcover_ecer_witness(sc2, {0, 1})));
  edged("setcover single addition", setcover_ecea_single(sc2),
        EdgeDelta::addition(setcover_ecea_single_witness(sc2, {0, 1})));
  edged("setcover multi addition", setcover_ecea_multi(sc2),
        EdgeDelta::addition(setcover_ecea_multi_witness(sc2, {0, 1})));
  const MaxCoverInput mc{3, {{1, 2, 3}, {1}, {2}}, 1};
  const LayeredParams lp;
  edged("maxcover addition", maxcover_imea(mc, lp),
        EdgeDelta::addition(maxcover_imea_witness(mc, lp, {0})));
  const WrappedInstance w = reopt_wrapper(reopt_inner_removal());
  out.push_back({"reopt wrapper", w.instance, *w.instance.baseline, {}});
  return out;
}

void properties(SuiteReport& r, const VerifyOptions& o) {
  const EvalConfig exact = solver_config(o).eval;
  const auto gadgets = gadget_cases();

  // Tie-freeness, and the engine against the reference evaluator.
  for (const auto& g : gadgets) {
    const auto outs = reference::outcomes(
        g.instance, apply_edge_delta(g.instance, g.delta), g.assignment);
    const bool tie = std::any_of(outs.begin(), outs.end(),
                                 [](const reference::Outcome& x) { return x.tie; });
    const Rational ref = reference::expected_mov(outs);
    const Rational got = expected_mov(g.instance, g.assignment, g.delta, exact).exact;
    add(r, "tie-free and matches reference: " + g.name,
        "no tie, E[MoV] " + str(ref), std::string(tie ? "tie" : "no tie") +
            ", E[MoV] " + str(got),
        !tie && ref == got);
  }

  Rng rng = derive_rng(o.seed, 11);
  const RandomInstanceParams params;
  int tie_free = 0;
  int agree = 0;
  for (int i = 0; i < 1000; ++i) {
    const Instance inst = random_instance(rng, params);
    const SeedAssignment a = random_assignment(rng, inst, 3, 2);
    const auto outs = reference::outcomes(inst, inst.graph.edges, a);
    tie_free += std::none_of(outs.begin(), outs.end(),
                             [](const reference::Outcome& x) { return x.tie; });
    agree += reference::expected_mov(outs) == expected_mov(inst, a, {}, exact).exact;
  }
  add(r, "tie-free random instances", "1000/1000", ratio(tie_free, 1000),
      tie_free == 1000);
  add(r, "engine matches reference on random instances", "1000/1000",
      ratio(agree, 1000), agree == 1000);

  int same = 0;
  for (int i = 0; i < 1000; ++i) {
    const Instance inst = random_instance(rng, params);
    const SeedAssignment a = random_assignment(rng, inst, 3, 2);
    const LiveGraph live = sample_live_graph(inst, inst.graph.edges, rng);
    same += influenced_sets(inst, live, a).per_seed ==
            reference::timed_cascade(inst, live, a);
  }
  add(r, "timed cascade = reachability", "1000/1000", ratio(same, 1000),
      same == 1000);

  int submodular = 0;
  int triples = 0;
  while (triples < 500) {
    const Instance inst = random_instance(rng, params);
    const int32_t n = inst.node_count();
    const LiveGraph live = sample_live_graph(inst, inst.graph.edges, rng);
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    const int32_t t_size = std::uniform_int_distribution<int32_t>(0, n - 1)(rng);
    const int32_t s_size = std::uniform_int_distribution<int32_t>(0, t_size)(rng);
    const NodeId x = order[t_size];
    auto chi_of = [&](int32_t count, bool with_x) {
      SeedAssignment a;
      const Message m = Message::single(inst.candidate_count(), 0, 1);
      for (int32_t i = 0; i < count; ++i) a.add(order[i], m);
      if (with_x) a.add(x, m);
      return chi(inst, live, a);
    };
    const int64_t gain_s = chi_of(s_size, true) - chi_of(s_size, false);
    const int64_t gain_t = chi_of(t_size, true) - chi_of(t_size, false);
    submodular += gain_s >= gain_t;
    ++triples;
  }
  add(r, "sample-level influence submodularity", "500/500", ratio(submodular, 500),
      submodular == 500);

  for (const auto& g : gadgets) {
    if (g.name.find("(no plan)") != std::string::npos) continue;
    const Rational truth = expected_mov(g.instance, g.assignment, g.delta, exact).exact;
    const double target = truth.get_d();
    int within = 0;
    for (int s = 0; s < 20; ++s) {
      EvalConfig mc = exact;
      mc.mode = Mode::kMonteCarlo;
      mc.samples = 100000;
      mc.seed = o.seed * 1000 + s;
      const Evaluation e = expected_mov(g.instance, g.assignment, g.delta, mc);
      const double err = std::abs(e.estimate - target);
      within += e.std_error > 0 ? err <= 4 * e.std_error : err <= 1e-9;
    }
    add(r, "Monte Carlo within 4 sigma: " + g.name, ">= 19/20", ratio(within, 20),
        within >= 19);
  }
}

using SuiteFn = void (*)(SuiteReport&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> kSuites{
      {"examples", examples},
      {"example1", example1},
      {"example2", example2},
      {"prop1", prop1},
      {"prop2", prop2},
      {"thm4-bound", thm4_bound},
      {"gadgets-iff", gadgets_iff},
      {"dks", dks},
      {"unlimited-edges", unlimited_edges},
      {"imer", imer},
      {"reopt", reopt_suite},
      {"properties", properties},
  };
  return kSuites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  for (const auto& [key, fn] : registry()) {
    if (key != name) continue;
    SuiteReport report;
    report.suite = name;
    const auto start = std::chrono::steady_clock::now();
    fn(report, options);
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }
  throw InvalidInput("unknown suite '" + name + "'");
}

std::string format_report(const SuiteReport& report) {
  size_t width = 5;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.name
       << std::string(width - c.name.size() + 2, ' ') << "expected " << c.expected
       << "  got " << c.got << '\n';
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const Check& c) { return !c.pass; });
  os << report.suite << ": " << report.checks.size() - failed << "/"
     << report.checks.size() << " checks passed in " << std::fixed;
  os.precision(2);
  os << report.seconds << " s\n";
  return os.str();
}

}  // namespace votectl
