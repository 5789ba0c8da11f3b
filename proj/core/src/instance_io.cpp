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

#include "votectl/instance_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "json_util.hpp"
#include "votectl/errors.hpp"

namespace votectl {

using nlohmann::ordered_json;

namespace {

ordered_json edges_to_json(const std::vector<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) {
    out.push_back({e.src, e.dst, format_rational(e.p)});
  }
  return out;
}

Rational probability_from_json(const ordered_json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_number()) return from_double(v.get<double>());
  throw InvalidInput("edge probability must be a string or a number");
}

std::vector<Edge> edges_from_json(const ordered_json& arr, const char* field) {
  if (!arr.is_array()) {
    throw InvalidInput(std::string(field) + " must be an array");
  }
  std::vector<Edge> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() < 2 || item.size() > 3) {
      throw InvalidInput(std::string(field) +
                         " entries are [src, dst, probability]");
    }
    Edge e;
    e.src = item[0].get<NodeId>();
    e.dst = item[1].get<NodeId>();
    e.p = item.size() == 3 ? probability_from_json(item[2]) : Rational(1);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

namespace detail {

ordered_json assignment_to_json(const SeedAssignment& a, bool bribed) {
  ordered_json seeds = ordered_json::array();
  for (const auto& e : a.entries()) {
    ordered_json s;
    s["node"] = e.node;
    s["news"] = e.message.news;
    if (bribed) s["bribed_candidate"] = e.bribed_for;
    seeds.push_back(std::move(s));
  }
  return seeds;
}

SeedAssignment assignment_from_json(const ordered_json& seeds) {
  if (!seeds.is_array()) throw InvalidInput("seeds must be an array");
  SeedAssignment a;
  for (const auto& s : seeds) {
    NodeId node = s.at("node").get<NodeId>();
    Message m(s.at("news").get<std::vector<int64_t>>());
    CandidateId bribed = s.value("bribed_candidate", 0);
    a.add(node, std::move(m), bribed);
  }
  return a;
}

}  // namespace detail

std::string instance_to_json(const Instance& instance, int indent) {
  ordered_json doc;
  if (!instance.name.empty()) doc["name"] = instance.name;
  doc["candidates"] = instance.candidate_count();
  doc["nodes"] = instance.node_count();
  doc["edges"] = edges_to_json(instance.graph.edges);
  if (instance.graph.addable) {
    doc["addable_edges"] = edges_to_json(*instance.graph.addable);
  }
  ordered_json scores = ordered_json::array();
  for (NodeId v = 0; v < instance.scores.voters(); ++v) {
    auto row = instance.scores.row(v);
    scores.push_back(std::vector<int64_t>(row.begin(), row.end()));
  }
  doc["scores"] = std::move(scores);
  if (instance.baseline) {
    doc["seeds"] =
        detail::assignment_to_json(*instance.baseline, instance.bribed_seeds);
  }
  doc["bribed"] = instance.bribed_seeds;
  if (instance.budget) {
    if (instance.budget->is_unlimited()) {
      doc["budget"] = "inf";
    } else {
      doc["budget"] = *instance.budget->limit;
    }
  }
  return doc.dump(indent) + "\n";
}

Instance instance_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed instance JSON: ") + e.what());
  }
  try {
    Instance inst;
    inst.name = doc.value("name", std::string());
    const int32_t candidates = doc.at("candidates").get<int32_t>();
    const int32_t nodes = doc.at("nodes").get<int32_t>();
    if (candidates < 0 || nodes < 0) {
      throw InvalidInput("candidate and node counts must be non-negative");
    }
    inst.graph.node_count = nodes;
    inst.graph.edges = edges_from_json(doc.at("edges"), "edges");
    if (doc.contains("addable_edges")) {
      inst.graph.addable =
          edges_from_json(doc.at("addable_edges"), "addable_edges");
    }
    inst.scores = ScoreProfile(0, candidates);
    const auto& rows = doc.at("scores");
    if (!rows.is_array()) throw InvalidInput("scores must be an array");
    for (const auto& row : rows) {
      inst.scores.push_row(row.get<std::vector<int64_t>>());
    }
    if (doc.contains("seeds")) {
      inst.baseline = detail::assignment_from_json(doc.at("seeds"));
    }
    inst.bribed_seeds = doc.value("bribed", false);
    if (doc.contains("budget")) {
      const auto& b = doc.at("budget");
      inst.budget = b.is_string() ? Budget::parse(b.get<std::string>())
                                  : Budget::of(b.get<int64_t>());
    }
    return inst;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad instance field: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << content;
}

Instance load_instance(const std::string& path) {
  return instance_from_json(read_file(path));
}

void save_instance(const Instance& instance, const std::string& path) {
  write_file(path, instance_to_json(instance));
}

}  // namespace votectl
