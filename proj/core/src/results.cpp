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

#include "votectl/results.hpp"

#include <charconv>
#include <sstream>

#include "json_util.hpp"
#include "votectl/errors.hpp"

namespace votectl {

using nlohmann::ordered_json;

namespace {

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double x = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InvalidInput("bad number: " + s);
  }
  return x;
}

ordered_json evaluation_to_json(const Evaluation& e) {
  ordered_json j;
  j["mode"] = mode_name(e.mode);
  if (e.mode == Mode::kExact) {
    j["value"] = format_rational(e.exact);
  } else {
    j["value"] = e.estimate;
    j["samples"] = e.samples;
    j["std_error"] = e.std_error;
  }
  return j;
}

Evaluation evaluation_from_json(const ordered_json& j) {
  Evaluation e;
  e.mode = parse_mode(j.at("mode").get<std::string>());
  if (e.mode == Mode::kExact) {
    e.exact = parse_rational(j.at("value").get<std::string>());
  } else {
    e.estimate = j.at("value").get<double>();
    e.samples = j.value("samples", int64_t{0});
    e.std_error = j.value("std_error", 0.0);
  }
  return e;
}

ordered_json budget_to_json(const Budget& b) {
  if (b.is_unlimited()) return "inf";
  return *b.limit;
}

Budget budget_from_json(const ordered_json& j) {
  if (j.is_string()) return Budget::parse(j.get<std::string>());
  return Budget::of(j.get<int64_t>());
}

ordered_json parse_doc(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed plan JSON: ") + e.what());
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string csv_header() {
  return std::string(kCsvVersionLine) + "\n" + kCsvColumns + "\n";
}

std::string csv_row(const ResultRow& row, bool timing) {
  if (row.instance_id.find(',') != std::string::npos) {
    throw InvalidInput("instance id must not contain commas");
  }
  const Evaluation& v = row.value;
  std::ostringstream out;
  out << row.instance_id << ',' << row.manipulation << ',' << mode_name(v.mode)
      << ',' << v.value_string() << ',' << v.samples << ','
      << shortest(v.std_error) << ',';
  if (timing) out << shortest(row.wall_time_ms);
  out << '\n';
  return out.str();
}

std::vector<ResultRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvVersionLine) {
    throw InvalidInput("missing result CSV version line");
  }
  if (!std::getline(in, line) || line != kCsvColumns) {
    throw InvalidInput("unexpected result CSV columns");
  }
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != 7) throw InvalidInput("bad result row: " + line);
    ResultRow r;
    r.instance_id = f[0];
    r.manipulation = f[1];
    r.value.mode = parse_mode(f[2]);
    if (r.value.mode == Mode::kExact) {
      r.value.exact = parse_rational(f[3]);
    } else {
      r.value.estimate = parse_double(f[3]);
    }
    r.value.samples = static_cast<int64_t>(parse_double(f[4]));
    r.value.std_error = parse_double(f[5]);
    r.wall_time_ms = f[6].empty() ? 0.0 : parse_double(f[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string seeding_plan_to_json(const SeedingPlan& plan,
                                 const std::string& instance_id) {
  ordered_json doc;
  doc["kind"] = "seeding";
  if (!instance_id.empty()) doc["instance"] = instance_id;
  doc["solver"] = plan.solver;
  doc["budget"] = budget_to_json(plan.budget);
  doc["seeds"] = detail::assignment_to_json(plan.assignment, false);
  doc["value"] = evaluation_to_json(plan.value);
  return doc.dump(2) + "\n";
}

SeedingPlan seeding_plan_from_json(const std::string& text) {
  ordered_json doc = parse_doc(text);
  try {
    if (doc.at("kind") != "seeding") throw InvalidInput("not a seeding plan");
    SeedingPlan p;
    p.solver = doc.value("solver", std::string());
    if (doc.contains("budget")) p.budget = budget_from_json(doc.at("budget"));
    p.assignment = detail::assignment_from_json(doc.at("seeds"));
    if (doc.contains("value")) p.value = evaluation_from_json(doc.at("value"));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad seeding plan: ") + e.what());
  }
}

std::string manipulation_name(const EdgePlan& plan) {
  if (plan.objective == EdgeObjective::kMov) {
    return plan.kind == EdgeKind::kRemoval ? "edge_removal" : "edge_addition";
  }
  return plan.kind == EdgeKind::kRemoval ? "influence_removal"
                                         : "influence_addition";
}

std::string edge_plan_to_json(const EdgePlan& plan,
                              const std::string& instance_id) {
  ordered_json doc;
  doc["kind"] = manipulation_name(plan);
  if (!instance_id.empty()) doc["instance"] = instance_id;
  doc["solver"] = plan.solver;
  doc["budget"] = budget_to_json(plan.budget);
  ordered_json edges = ordered_json::array();
  for (const EdgeKey& e : plan.edges) edges.push_back({e.src, e.dst});
  doc["edges"] = std::move(edges);
  doc["value"] = evaluation_to_json(plan.value);
  return doc.dump(2) + "\n";
}

EdgePlan edge_plan_from_json(const std::string& text) {
  ordered_json doc = parse_doc(text);
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    EdgePlan p;
    if (kind == "edge_removal" || kind == "influence_removal") {
      p.kind = EdgeKind::kRemoval;
    } else if (kind == "edge_addition" || kind == "influence_addition") {
      p.kind = EdgeKind::kAddition;
    } else {
      throw InvalidInput("not an edge plan: " + kind);
    }
    p.objective = kind.rfind("influence", 0) == 0 ? EdgeObjective::kInfluence
                                                  : EdgeObjective::kMov;
    p.solver = doc.value("solver", std::string());
    if (doc.contains("budget")) p.budget = budget_from_json(doc.at("budget"));
    for (const auto& e : doc.at("edges")) {
      p.edges.push_back({e.at(0).get<NodeId>(), e.at(1).get<NodeId>()});
    }
    std::sort(p.edges.begin(), p.edges.end());
    if (doc.contains("value")) p.value = evaluation_from_json(doc.at("value"));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad edge plan: ") + e.what());
  }
}

std::string plan_kind(const std::string& text) {
  ordered_json doc = parse_doc(text);
  if (!doc.contains("kind") || !doc.at("kind").is_string()) {
    throw InvalidInput("plan document without kind");
  }
  return doc.at("kind").get<std::string>();
}

}  // namespace votectl
