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

#ifndef VOTECTL_INSTANCE_IO_HPP_
#define VOTECTL_INSTANCE_IO_HPP_

#include <string>

#include "votectl/model.hpp"

namespace votectl {

// Instance documents look like
//   {"name": ..., "candidates": 3, "nodes": 5,
//    "edges": [[0, 2, "1/2"], ...], "addable_edges": [...],
//    "scores": [[0, 2, 1], ...],
//    "seeds": [{"node": 0, "news": [0, 1, 0]}], "bribed": false,
//    "budget": 2}
// "addable_edges" absent means every missing pair with probability 1.
// "budget" is optional and may be "inf".
std::string instance_to_json(const Instance& instance, int indent = 2);
Instance instance_from_json(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace votectl

#endif  // VOTECTL_INSTANCE_IO_HPP_
