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

#ifndef VOTECTL_SRC_JSON_UTIL_HPP_
#define VOTECTL_SRC_JSON_UTIL_HPP_

#include <nlohmann/json.hpp>

#include "votectl/model.hpp"

namespace votectl::detail {

nlohmann::ordered_json assignment_to_json(const SeedAssignment& a,
                                          bool bribed);
SeedAssignment assignment_from_json(const nlohmann::ordered_json& seeds);

}  // namespace votectl::detail

#endif  // VOTECTL_SRC_JSON_UTIL_HPP_
