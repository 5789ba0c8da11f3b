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

// Runs one verification suite per acceptance criterion and prints a single
// PASS/FAIL line for each. A criterion passes when every check in its suite
// passes within the time limit. Failing checks are listed under the line.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "votectl/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* suite;
  const char* title;
  double limit_seconds;
};

const std::vector<Criterion> kCriteria{
    {1, "example2", "Example 2: per-live-graph MoV {0,2}, expected MoV 1", 1},
    {2, "example1", "Example 1: single-candidate plans tie at best, mixed plan wins", 10},
    {3, "prop1", "greedy trap: greedy 0, brute force 1", 30},
    {4, "prop2", "tree trap r=3: greedy 2, brute force 3", 120},
    {5, "thm4-bound", "greedy seeding bound on 200 random instances", 300},
    {6, "gadgets-iff", "reduction gadgets: YES/NO batteries", 300},
    {7, "dks", "densest-subgraph identity on 20 random graphs", 60},
    {8, "unlimited-edges", "closed-form unlimited edge plans are optimal", 300},
    {9, "imer", "set-intersection removal optimum and the 2x identity", 120},
    {10, "reopt", "reoptimization wrapper", 120},
    {11, "properties", "tie-freeness, cascade, submodularity, sampling", 600},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (!wanted.empty() &&
        std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) {
      continue;
    }
    const votectl::SuiteReport r = votectl::run_suite(c.suite);
    const bool in_time = r.seconds < c.limit_seconds;
    const bool pass = r.passed() && in_time;
    failures += !pass;
    size_t ok = 0;
    for (const auto& check : r.checks) ok += check.pass;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  "
              << c.title << "  (" << ok << "/" << r.checks.size() << " checks, "
              << r.seconds << " s of " << c.limit_seconds << " s)" << std::endl;
    for (const auto& check : r.checks) {
      if (!check.pass) {
        std::cout << "    failed: " << check.name << ": expected " << check.expected
                  << ", got " << check.got << '\n';
      }
    }
    if (!in_time) std::cout << "    failed: over the time limit\n";
  }
  return failures == 0 ? 0 : 1;
}
