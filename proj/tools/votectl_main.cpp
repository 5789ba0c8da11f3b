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

// votectl: generate instances, run solvers, re-evaluate plans, and run the
// verification suites.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "votectl/diffusion.hpp"
#include "votectl/edgectl.hpp"
#include "votectl/errors.hpp"
#include "votectl/evaluate.hpp"
#include "votectl/gadgets.hpp"
#include "votectl/instance_io.hpp"
#include "votectl/random_instances.hpp"
#include "votectl/results.hpp"
#include "votectl/seedctl.hpp"
#include "votectl/solve.hpp"
#include "votectl/sources.hpp"
#include "votectl/verify.hpp"

namespace {

using namespace votectl;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitHard = 10;
constexpr int kExitCap = 11;
constexpr int kExitPrecondition = 12;

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0   success\n"
    "  1   usage error, invalid input, or a failed verification suite\n"
    "  10  hard-to-manipulate: the budget is below the cheapest useful message\n"
    "  11  an enumeration or search cap was exceeded\n"
    "  12  a solver precondition does not hold\n";

struct EvalFlags {
  std::string mode = "exact";
  int64_t samples = 10'000;
  uint64_t seed = 1;
  int workers = 0;

  void attach(CLI::App* app) {
    app->add_option("--mode", mode, "Evaluator: exact or mc")
        ->check(CLI::IsMember({"exact", "mc"}));
    app->add_option("--samples", samples, "Monte Carlo samples")
        ->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Master seed");
    app->add_option("--workers", workers,
                    "Worker threads (default: VOTECTL_WORKERS or 1)");
  }

  SolverConfig config() const {
    SolverConfig cfg;
    cfg.eval.mode = parse_mode(mode);
    cfg.eval.samples = samples;
    cfg.eval.seed = seed;
    cfg.eval.workers = workers;
    return cfg;
  }
};

std::string instance_id(const Instance& inst, const std::string& path) {
  if (!inst.name.empty()) return inst.name;
  return std::filesystem::path(path).stem().string();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_file(out, text);
  }
}

void append_csv(const std::string& path, const ResultRow& row, bool timing) {
  if (path.empty()) return;
  const bool fresh =
      !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
  std::ofstream os(path, std::ios::app);
  if (!os) throw InvalidInput("cannot open " + path);
  if (fresh) os << csv_header();
  os << csv_row(row, timing);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------------------
// gen

struct GenFlags {
  std::string generator;
  std::string sets;
  int32_t n = 0;
  int32_t h = 0;
  int32_t r = 3;
  int32_t vertices = 0;
  std::string edges;
  std::string a;
  int32_t k = 0;
  int32_t budget = 0;
  int32_t replication = 1;
  bool negative = false;
  LayeredParams layered;
  std::string q = "1/2";
  std::string inner;
  uint64_t seed = 1;
  std::string out;
};

SetSystem set_system(const GenFlags& f) {
  SetSystem s{f.n, parse_sets(f.sets), f.h};
  check_set_system(s);
  return s;
}

SimpleGraph simple_graph(const GenFlags& f) {
  SimpleGraph g{f.vertices, parse_edges(f.edges)};
  check_graph(g);
  return g;
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> kNames{
      "example1",         "example2",          "prop1",
      "prop2",            "setcover-ecs",      "partition",
      "dks",              "msi-imer",          "independent-set-ecer",
      "setcover-ecer",    "setcover-ecea-single", "setcover-ecea-multi",
      "maxcover-imea",    "reopt-wrapper",     "random",
      "random-single-article"};
  return kNames;
}

Instance generate(const GenFlags& f) {
  const std::string& g = f.generator;
  if (g == "example1") return example1_clique();
  if (g == "example2") return example2_diamond();
  if (g == "prop1") return prop1_greedy_trap();
  if (g == "prop2") return prop2_tree_trap(f.r);
  if (g == "setcover-ecs") return setcover_ecs(set_system(f));
  if (g == "partition") return partition_line({parse_integers(f.a), f.k});
  if (g == "dks") return dks_ecs(simple_graph(f), f.budget);
  if (g == "msi-imer") return msi_imer(set_system(f), f.replication, f.negative);
  if (g == "independent-set-ecer") return independent_set_ecer(simple_graph(f));
  if (g == "setcover-ecer") return setcover_ecer(set_system(f));
  if (g == "setcover-ecea-single") return setcover_ecea_single(set_system(f));
  if (g == "setcover-ecea-multi") return setcover_ecea_multi(set_system(f));
  if (g == "maxcover-imea") {
    LayeredParams p = f.layered;
    p.q = parse_rational(f.q);
    return maxcover_imea(set_system(f), p);
  }
  if (g == "reopt-wrapper") {
    if (f.inner.empty()) throw InvalidInput("reopt-wrapper needs --inner");
    return reopt_wrapper(load_instance(f.inner)).instance;
  }
  if (g == "random") {
    Rng rng = derive_rng(f.seed, 0);
    return random_instance(rng, RandomInstanceParams{});
  }
  if (g == "random-single-article") {
    Rng rng = derive_rng(f.seed, 0);
    return random_single_article_instance(rng, 8, 12, 10);
  }
  throw InvalidInput("unknown generator: " + g);
}

void add_gen(CLI::App& app, GenFlags& f) {
  CLI::App* gen = app.add_subcommand("gen", "Write a generated instance as JSON");
  // --h is a generator parameter here.
  gen->set_help_flag("--help", "Print this help message and exit");
  gen->add_option("generator", f.generator, "Generator name")
      ->required()
      ->check(CLI::IsMember(generator_names()));
  gen->add_option("--sets", f.sets, "Set family, e.g. \"1,2;2,3\"");
  gen->add_option("--n", f.n, "Universe size of the set family");
  gen->add_option("--h", f.h, "Cover size or number of sets to pick");
  gen->add_option("--r", f.r, "Size parameter of the tree trap");
  gen->add_option("--vertices", f.vertices, "Vertex count of the source graph");
  gen->add_option("--edges", f.edges, "Source graph edges, e.g. \"0-1,1-2\"");
  gen->add_option("--a", f.a, "Partition multiset, e.g. \"1,1,2,2\"");
  gen->add_option("--k", f.k, "Partition part size");
  gen->add_option("--budget", f.budget, "Seeding budget for the dks gadget");
  gen->add_option("--replication", f.replication, "Edge replication factor");
  gen->add_flag("--negative", f.negative, "Use messages that hurt c0");
  gen->add_option("--layers", f.layered.layers, "Layer count");
  gen->add_option("--sinks", f.layered.sinks, "Sinks per layer");
  gen->add_option("--q", f.q, "Probability of the layered edges");
  gen->add_option("--inner", f.inner, "Inner instance file for reopt-wrapper");
  gen->add_option("--seed", f.seed, "Seed for the random generators");
  gen->add_option("--out", f.out, "Output path (default stdout)");
  gen->callback([&f] { emit(instance_to_json(generate(f)), f.out); });
}

// ---------------------------------------------------------------------------
// solve, eval, reopt

struct SolveFlags {
  std::string instance;
  std::string solver;
  std::string budget;
  EvalFlags eval;
  std::string out;
  std::string csv;
  bool no_timing = false;
};

std::optional<Budget> budget_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Budget::parse(text);
}

std::string plan_json(const SolveResult& r, const std::string& id) {
  return r.seeding ? seeding_plan_to_json(*r.seeding, id)
                   : edge_plan_to_json(*r.edges, id);
}

void add_solve(CLI::App& app, SolveFlags& f) {
  CLI::App* cmd = app.add_subcommand(
      "solve", "Run a solver; print the plan JSON and optionally append a CSV row");
  cmd->add_option("--instance", f.instance, "Instance JSON")->required();
  cmd->add_option("--solver", f.solver, "Solver")
      ->required()
      ->check(CLI::IsMember(solver_names()));
  cmd->add_option("--budget", f.budget, "Budget: N or inf (default: the instance's)");
  f.eval.attach(cmd);
  cmd->add_option("--out", f.out, "Plan output path (default stdout)");
  cmd->add_option("--csv", f.csv, "Append the result row to this CSV file");
  cmd->add_flag("--no-timing", f.no_timing, "Leave wall_time_ms empty");
  cmd->footer(kExitCodes);
  cmd->callback([&f] {
    const Instance inst = load_instance(f.instance);
    const auto start = std::chrono::steady_clock::now();
    const SolveResult r = solve(inst, f.solver, budget_flag(f.budget), f.eval.config());
    const double ms = elapsed_ms(start);
    const std::string id = instance_id(inst, f.instance);
    emit(plan_json(r, id), f.out);
    append_csv(f.csv, {id, r.manipulation, r.value(), ms}, !f.no_timing);
  });
}

struct EvalCmdFlags {
  std::string instance;
  std::string plan;
  EvalFlags eval;
  bool no_timing = false;
};

void add_eval(CLI::App& app, EvalCmdFlags& f) {
  CLI::App* cmd =
      app.add_subcommand("eval", "Re-evaluate a saved plan and print a CSV row");
  cmd->add_option("--instance", f.instance, "Instance JSON")->required();
  cmd->add_option("--plan", f.plan, "Plan JSON")->required();
  f.eval.attach(cmd);
  cmd->add_flag("--no-timing", f.no_timing, "Leave wall_time_ms empty");
  cmd->footer(kExitCodes);
  cmd->callback([&f] {
    const Instance inst = load_instance(f.instance);
    const std::string text = read_file(f.plan);
    const EvalConfig cfg = f.eval.config().eval;
    const auto start = std::chrono::steady_clock::now();
    ResultRow row;
    row.instance_id = instance_id(inst, f.instance);
    if (plan_kind(text) == "seeding") {
      row.manipulation = "seeding";
      row.value = delta_mov_seeding(inst, seeding_plan_from_json(text).assignment, cfg);
    } else {
      const EdgePlan plan = edge_plan_from_json(text);
      row.manipulation = manipulation_name(plan);
      row.value = evaluate_edge_plan(inst, plan, cfg);
    }
    row.wall_time_ms = elapsed_ms(start);
    std::cout << csv_header() << csv_row(row, !f.no_timing);
  });
}

struct ReoptFlags {
  std::string instance;
  std::string plan;
  std::string edge;
  std::string probability;
  std::string solver;
  std::string budget;
  EvalFlags eval;
  std::string out;
};

void add_reopt(CLI::App& app, ReoptFlags& f) {
  CLI::App* cmd = app.add_subcommand(
      "reopt", "Change one edge probability and re-solve, reporting the old plan's value");
  cmd->add_option("--instance", f.instance, "Instance JSON")->required();
  cmd->add_option("--plan", f.plan, "Known optimal plan JSON")->required();
  cmd->add_option("--edge", f.edge, "Edge to change, e.g. \"3-4\"")->required();
  cmd->add_option("--p", f.probability, "New probability, e.g. 1/2 or 0")->required();
  cmd->add_option("--solver", f.solver, "Solver for the modified instance")
      ->required()
      ->check(CLI::IsMember(solver_names()));
  cmd->add_option("--budget", f.budget, "Budget: N or inf");
  f.eval.attach(cmd);
  cmd->add_option("--out", f.out, "Output path (default stdout)");
  cmd->footer(kExitCodes);
  cmd->callback([&f] {
    const Instance inst = load_instance(f.instance);
    const auto pairs = parse_edges(f.edge);
    if (pairs.size() != 1) throw InvalidInput("--edge takes exactly one edge");
    const EdgeKey edge{pairs[0].first, pairs[0].second};
    const Rational p = parse_rational(f.probability);
    const SolverConfig cfg = f.eval.config();
    const std::optional<Budget> budget = budget_flag(f.budget);
    const std::string text = read_file(f.plan);
    const std::string id = instance_id(inst, f.instance);
    nlohmann::ordered_json doc;
    doc["instance"] = id;
    doc["edge"] = std::to_string(edge.src) + "-" + std::to_string(edge.dst);
    doc["probability"] = format_rational(p);
    if (plan_kind(text) == "seeding") {
      const auto r = reopt(inst, seeding_plan_from_json(text), edge, p,
                           [&](const Instance& x) {
                             return *solve(x, f.solver, budget, cfg).seeding;
                           },
                           cfg.eval);
      doc["known_value"] = r.known_value.value_string();
      doc["plan"] = nlohmann::ordered_json::parse(seeding_plan_to_json(r.solution, id));
    } else {
      const auto r = reopt(inst, edge_plan_from_json(text), edge, p,
                           [&](const Instance& x) {
                             SolveResult s = solve(x, f.solver, budget, cfg);
                             if (!s.edges) throw InvalidInput("solver does not produce an edge plan");
                             return *s.edges;
                           },
                           cfg.eval);
      doc["known_value"] = r.known_value.value_string();
      doc["plan"] = nlohmann::ordered_json::parse(edge_plan_to_json(r.solution, id));
    }
    emit(doc.dump(2), f.out);
  });
}

// ---------------------------------------------------------------------------
// verify

struct VerifyFlags {
  std::vector<std::string> suites;
  uint64_t seed = VerifyOptions{}.seed;
  int workers = 0;
  bool failed = false;
};

void add_verify(CLI::App& app, VerifyFlags& f) {
  std::vector<std::string> allowed = suite_names();
  allowed.push_back("all");
  CLI::App* cmd = app.add_subcommand("verify", "Run verification suites");
  cmd->add_option("suite", f.suites, "Suite names, or all")
      ->required()
      ->check(CLI::IsMember(allowed));
  cmd->add_option("--seed", f.seed, "Master seed of the random batteries");
  cmd->add_option("--workers", f.workers, "Worker threads");
  cmd->footer(kExitCodes);
  cmd->callback([&f] {
    std::vector<std::string> names;
    for (const auto& s : f.suites) {
      if (s != "all") {
        names.push_back(s);
        continue;
      }
      for (const auto& n : suite_names()) {
        if (n != "examples") names.push_back(n);
      }
    }
    for (const auto& name : names) {
      const SuiteReport report = run_suite(name, {f.seed, f.workers});
      std::cout << format_report(report) << std::flush;
      f.failed |= !report.passed();
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"votectl: election manipulation through social influence"};
  app.footer(kExitCodes);
  app.require_subcommand(1);

  GenFlags gen;
  SolveFlags solve_flags;
  EvalCmdFlags eval;
  ReoptFlags reopt_flags;
  VerifyFlags verify;
  add_gen(app, gen);
  add_solve(app, solve_flags);
  add_eval(app, eval);
  add_reopt(app, reopt_flags);
  add_verify(app, verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  } catch (const HardToManipulate& e) {
    std::cerr << "hard-to-manipulate: " << e.what() << '\n';
    return kExitHard;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const PreconditionFailed& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return verify.failed ? kExitError : kExitOk;
}
