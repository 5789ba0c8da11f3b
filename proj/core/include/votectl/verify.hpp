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

// Named self-check suites reproducing the documented behaviour of the
// solvers and gadgets against independent oracles.

#ifndef VOTECTL_VERIFY_HPP_
#define VOTECTL_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace votectl {

struct Check {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool passed() const;
};

struct VerifyOptions {
  uint64_t seed = 2026;
  int workers = 0;
};

std::vector<std::string> suite_names();

// Throws InvalidInput for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options = {});

std::string format_report(const SuiteReport& report);

}  // namespace votectl

#endif  // VOTECTL_VERIFY_HPP_
