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

#include "votectl/sources.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "votectl/errors.hpp"

namespace votectl {

namespace {

constexpr int kMaxSets = 24;
constexpr int kMaxVertices = 24;

uint64_t element_mask(const std::vector<int32_t>& set) {
  uint64_t m = 0;
  for (int32_t z : set) m |= uint64_t{1} << (z - 1);
  return m;
}

std::vector<uint64_t> masks_of(const SetSystem& s) {
  check_set_system(s);
  if (s.g() > kMaxSets) {
    throw CapExceeded("sets for exhaustive search", s.g(), kMaxSets);
  }
  std::vector<uint64_t> out;
  for (const auto& x : s.sets) out.push_back(element_mask(x));
  return out;
}

int32_t to_int(const std::string& tok) {
  try {
    size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw InvalidInput("bad integer: " + tok);
    return static_cast<int32_t>(v);
  } catch (const std::logic_error&) {
    throw InvalidInput("bad integer: " + tok);
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    cur.erase(std::remove_if(cur.begin(), cur.end(), ::isspace), cur.end());
    out.push_back(cur);
  }
  return out;
}

}  // namespace

void check_set_system(const SetSystem& s) {
  if (s.n < 1 || s.n > 62) throw InvalidInput("element count must be in 1..62");
  if (s.h < 0) throw InvalidInput("negative target h");
  for (const auto& x : s.sets) {
    if (x.empty()) throw InvalidInput("empty set");
    std::set<int32_t> seen;
    for (int32_t z : x) {
      if (z < 1 || z > s.n) {
        throw InvalidInput("element " + std::to_string(z) + " out of range");
      }
      if (!seen.insert(z).second) {
        throw InvalidInput("repeated element " + std::to_string(z));
      }
    }
  }
}

void check_graph(const SimpleGraph& g) {
  if (g.n < 1) throw InvalidInput("graph needs a vertex");
  std::set<std::pair<int32_t, int32_t>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) {
      throw InvalidInput("edge endpoint out of range");
    }
    if (u == v) throw InvalidInput("self-loop in source graph");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw InvalidInput("repeated edge in source graph");
    }
  }
}

std::optional<std::vector<int32_t>> find_set_cover(const SetSystem& s) {
  auto masks = masks_of(s);
  const uint64_t all = s.n == 64 ? ~uint64_t{0} : (uint64_t{1} << s.n) - 1;
  const uint32_t g = static_cast<uint32_t>(masks.size());
  std::optional<std::vector<int32_t>> best;
  for (uint32_t pick = 0; pick < (uint32_t{1} << g); ++pick) {
    uint64_t cover = 0;
    for (uint32_t i = 0; i < g; ++i) {
      if (pick >> i & 1) cover |= masks[i];
    }
    if (cover != all) continue;
    std::vector<int32_t> chosen;
    for (uint32_t i = 0; i < g; ++i) {
      if (pick >> i & 1) chosen.push_back(static_cast<int32_t>(i));
    }
    if (!best || chosen.size() < best->size() ||
        (chosen.size() == best->size() && chosen < *best)) {
      best = std::move(chosen);
    }
  }
  return best;
}

std::optional<int32_t> min_set_cover(const SetSystem& s) {
  auto c = find_set_cover(s);
  if (!c) return std::nullopt;
  return static_cast<int32_t>(c->size());
}

bool set_cover_satisfiable(const SetSystem& s) {
  auto c = min_set_cover(s);
  return c && *c <= s.h;
}

std::vector<int32_t> find_max_independent_set(const SimpleGraph& g) {
  check_graph(g);
  if (g.n > kMaxVertices) {
    throw CapExceeded("vertices for exhaustive search", g.n, kMaxVertices);
  }
  std::vector<uint32_t> adj(g.n, 0);
  for (auto [u, v] : g.edges) {
    adj[u] |= uint32_t{1} << v;
    adj[v] |= uint32_t{1} << u;
  }
  uint32_t best = 0;
  int best_size = -1;
  for (uint32_t s = 0; s < (uint32_t{1} << g.n); ++s) {
    bool ok = true;
    for (int32_t v = 0; v < g.n && ok; ++v) {
      if ((s >> v & 1) && (adj[v] & s)) ok = false;
    }
    if (ok && std::popcount(s) > best_size) {
      best = s;
      best_size = std::popcount(s);
    }
  }
  std::vector<int32_t> out;
  for (int32_t v = 0; v < g.n; ++v) {
    if (best >> v & 1) out.push_back(v);
  }
  return out;
}

int32_t max_independent_set(const SimpleGraph& g) {
  return static_cast<int32_t>(find_max_independent_set(g).size());
}

std::vector<int32_t> find_msi(const MsiInput& m) {
  auto masks = masks_of(m);
  const uint32_t g = static_cast<uint32_t>(masks.size());
  if (m.h < 1 || m.h > static_cast<int32_t>(g)) {
    throw InvalidInput("MSI needs 1 <= h <= number of sets");
  }
  uint32_t best = 0;
  int best_size = -1;
  for (uint32_t pick = 0; pick < (uint32_t{1} << g); ++pick) {
    if (std::popcount(pick) != m.h) continue;
    uint64_t inter = ~uint64_t{0};
    for (uint32_t i = 0; i < g; ++i) {
      if (pick >> i & 1) inter &= masks[i];
    }
    if (std::popcount(inter) > best_size) {
      best = pick;
      best_size = std::popcount(inter);
    }
  }
  std::vector<int32_t> out;
  for (uint32_t i = 0; i < g; ++i) {
    if (best >> i & 1) out.push_back(static_cast<int32_t>(i));
  }
  return out;
}

int32_t msi_opt(const MsiInput& m) {
  uint64_t inter = ~uint64_t{0};
  for (int32_t i : find_msi(m)) inter &= element_mask(m.sets[i]);
  return std::popcount(inter);
}

int32_t max_cover_opt(const MaxCoverInput& m) {
  auto masks = masks_of(m);
  const uint32_t g = static_cast<uint32_t>(masks.size());
  int best = 0;
  for (uint32_t pick = 0; pick < (uint32_t{1} << g); ++pick) {
    if (std::popcount(pick) > m.h) continue;
    uint64_t cover = 0;
    for (uint32_t i = 0; i < g; ++i) {
      if (pick >> i & 1) cover |= masks[i];
    }
    best = std::max(best, std::popcount(cover));
  }
  return best;
}

int32_t internal_edges(const SimpleGraph& g, const std::vector<int32_t>& subset) {
  std::set<int32_t> in(subset.begin(), subset.end());
  int32_t count = 0;
  for (auto [u, v] : g.edges) count += in.count(u) && in.count(v) ? 1 : 0;
  return count;
}

int32_t densest_k_subgraph(const SimpleGraph& g, int32_t k) {
  check_graph(g);
  if (g.n > kMaxVertices) {
    throw CapExceeded("vertices for exhaustive search", g.n, kMaxVertices);
  }
  int32_t best = 0;
  for (uint32_t s = 0; s < (uint32_t{1} << g.n); ++s) {
    if (std::popcount(s) != k) continue;
    int32_t count = 0;
    for (auto [u, v] : g.edges) count += (s >> u & 1) && (s >> v & 1) ? 1 : 0;
    best = std::max(best, count);
  }
  return best;
}

std::vector<std::vector<int32_t>> parse_sets(const std::string& text) {
  std::vector<std::vector<int32_t>> out;
  for (const auto& part : split(text, ';')) {
    if (part.empty()) throw InvalidInput("empty set in list: " + text);
    std::vector<int32_t> set;
    for (const auto& tok : split(part, ',')) set.push_back(to_int(tok));
    out.push_back(std::move(set));
  }
  return out;
}

std::vector<std::pair<int32_t, int32_t>> parse_edges(const std::string& text) {
  std::vector<std::pair<int32_t, int32_t>> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ',')) {
    auto dash = part.find('-');
    if (dash == std::string::npos) throw InvalidInput("bad edge: " + part);
    out.push_back({to_int(part.substr(0, dash)), to_int(part.substr(dash + 1))});
  }
  return out;
}

std::vector<int64_t> parse_integers(const std::string& text) {
  std::vector<int64_t> out;
  for (const auto& tok : split(text, ',')) out.push_back(to_int(tok));
  return out;
}

}  // namespace votectl
