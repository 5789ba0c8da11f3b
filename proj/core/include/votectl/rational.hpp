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

#ifndef VOTECTL_RATIONAL_HPP_
#define VOTECTL_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace votectl {

using Rational = mpq_class;

// Parses "a/b", "a" or a plain decimal such as "0.25" into an exact value.
Rational parse_rational(const std::string& text);

// Always "num/den", including integers ("1/1").
std::string format_rational(const Rational& q);

Rational make_rational(int64_t num, int64_t den = 1);
Rational from_int128(__int128 num, __int128 den);

// Exact binary value of a double.
Rational from_double(double x);

double to_double(const Rational& q);

}  // namespace votectl

#endif  // VOTECTL_RATIONAL_HPP_
