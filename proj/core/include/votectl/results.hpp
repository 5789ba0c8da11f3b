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

// Plan documents and the versioned result CSV.

#ifndef VOTECTL_RESULTS_HPP_
#define VOTECTL_RESULTS_HPP_

#include <string>
#include <vector>

#include "votectl/edgectl.hpp"
#include "votectl/evaluate.hpp"
#include "votectl/seedctl.hpp"

namespace votectl {

inline constexpr const char* kCsvVersionLine = "# votectl-results v1";
inline constexpr const char* kCsvColumns =
    "instance_id,manipulation,mode,value,samples,std_error,wall_time_ms";

struct ResultRow {
  std::string instance_id;
  std::string manipulation;  // seeding | edge_removal | edge_addition | influence_*
  Evaluation value;
  double wall_time_ms = 0.0;
};

// Version line and column header, newline terminated.
std::string csv_header();
// Without timing the wall_time_ms field stays empty so that reruns are
// byte-identical.
std::string csv_row(const ResultRow& row, bool timing = true);
std::vector<ResultRow> parse_csv(const std::string& text);

std::string seeding_plan_to_json(const SeedingPlan& plan,
                                 const std::string& instance_id = "");
SeedingPlan seeding_plan_from_json(const std::string& text);

std::string edge_plan_to_json(const EdgePlan& plan,
                              const std::string& instance_id = "");
EdgePlan edge_plan_from_json(const std::string& text);

// "seeding" or one of the edge manipulation names, read from a plan file.
std::string plan_kind(const std::string& text);

std::string manipulation_name(const EdgePlan& plan);

}  // namespace votectl

#endif  // VOTECTL_RESULTS_HPP_
