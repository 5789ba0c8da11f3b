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

#ifndef VOTECTL_ERRORS_HPP_
#define VOTECTL_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace votectl {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input documents or parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// The budget is smaller than the largest score deficit of c0.
class HardToManipulate : public Error {
 public:
  HardToManipulate(int64_t budget, int64_t delta);
  int64_t budget() const { return budget_; }
  int64_t delta() const { return delta_; }

 private:
  int64_t budget_;
  int64_t delta_;
};

// An enumeration or search space exceeds its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, double requested, double cap);
  double requested() const { return requested_; }
  double cap() const { return cap_; }

 private:
  double requested_;
  double cap_;
};

// A solver was called outside its precondition.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant, such as a tie after score revision.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace votectl

#endif  // VOTECTL_ERRORS_HPP_
