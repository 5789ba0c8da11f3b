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

#include "votectl/errors.hpp"

#include <sstream>

namespace votectl {

HardToManipulate::HardToManipulate(int64_t budget, int64_t delta)
    : Error("hard-to-manipulate regime: budget " + std::to_string(budget) +
            " is below delta " + std::to_string(delta)),
      budget_(budget),
      delta_(delta) {}

namespace {

std::string cap_message(const std::string& what, double requested,
                        double cap) {
  std::ostringstream out;
  out << what << ": " << requested << " exceeds the cap of " << cap;
  return out.str();
}

}  // namespace

CapExceeded::CapExceeded(const std::string& what, double requested,
                         double cap)
    : Error(cap_message(what, requested, cap)),
      requested_(requested),
      cap_(cap) {}

}  // namespace votectl
