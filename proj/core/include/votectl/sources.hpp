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

// Combinatorial problems that the gadgets encode, with exhaustive solvers
// for small inputs.

#ifndef VOTECTL_SOURCES_HPP_
#define VOTECTL_SOURCES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace votectl {

// Elements are 1..n.
struct SetSystem {
  int32_t n = 0;
  std::vector<std::vector<int32_t>> sets;
  int32_t h = 0;

  int32_t g() const { return static_cast<int32_t>(sets.size()); }
};

// Set-Cover: is there a cover of N with at most h sets?
using SetCover = SetSystem;
// Maximum-Subset-Intersection: exactly h sets with the largest intersection.
using MsiInput = SetSystem;
// Max-Cover: at most h sets covering the most elements.
using MaxCoverInput = SetSystem;

// Undirected simple graph on vertices 0..n-1.
struct SimpleGraph {
  int32_t n = 0;
  std::vector<std::pair<int32_t, int32_t>> edges;
};

struct PartitionInput {
  std::vector<int64_t> a;
  int32_t k = 0;
};

// Throws InvalidInput on elements out of range, empty or repeated entries.
void check_set_system(const SetSystem& s);
void check_graph(const SimpleGraph& g);

// Smallest cover size, or nullopt when the sets do not cover N.
std::optional<int32_t> min_set_cover(const SetSystem& s);
bool set_cover_satisfiable(const SetSystem& s);
// Sets (0-based) of the lexicographically first smallest cover.
std::optional<std::vector<int32_t>> find_set_cover(const SetSystem& s);

int32_t max_independent_set(const SimpleGraph& g);
std::vector<int32_t> find_max_independent_set(const SimpleGraph& g);

int32_t msi_opt(const MsiInput& m);
std::vector<int32_t> find_msi(const MsiInput& m);

int32_t max_cover_opt(const MaxCoverInput& m);

// Edges of g with both endpoints in the subset.
int32_t internal_edges(const SimpleGraph& g, const std::vector<int32_t>& subset);
int32_t densest_k_subgraph(const SimpleGraph& g, int32_t k);

// "1,2;2,3" style set lists and "0-1,1-2" style edge lists.
std::vector<std::vector<int32_t>> parse_sets(const std::string& text);
std::vector<std::pair<int32_t, int32_t>> parse_edges(const std::string& text);
std::vector<int64_t> parse_integers(const std::string& text);

}  // namespace votectl

#endif  // VOTECTL_SOURCES_HPP_
