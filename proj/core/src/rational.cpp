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

#include "votectl/rational.hpp"

#include <cmath>

#include "votectl/errors.hpp"

namespace votectl {

namespace {

mpz_class from_u128(unsigned __int128 v) {
  mpz_class hi(static_cast<unsigned long>(v >> 64));
  mpz_class lo(static_cast<unsigned long>(v & 0xFFFFFFFFFFFFFFFFull));
  return (hi << 64) + lo;
}

mpz_class from_i128(__int128 v) {
  if (v >= 0) return from_u128(static_cast<unsigned __int128>(v));
  return -from_u128(-static_cast<unsigned __int128>(v));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty rational");
  Rational q;
  if (text.find('.') != std::string::npos ||
      text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos) {
    // Decimal notation is read exactly, digit by digit.
    size_t pos = 0;
    bool negative = false;
    if (text[pos] == '-' || text[pos] == '+') negative = text[pos++] == '-';
    mpz_class digits = 0;
    int64_t scale = 0;
    bool seen_dot = false;
    bool any = false;
    for (; pos < text.size(); ++pos) {
      char ch = text[pos];
      if (ch >= '0' && ch <= '9') {
        digits = digits * 10 + (ch - '0');
        any = true;
        if (seen_dot) --scale;
      } else if (ch == '.' && !seen_dot) {
        seen_dot = true;
      } else {
        break;
      }
    }
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
      try {
        size_t used = 0;
        scale += std::stoll(text.substr(pos + 1), &used);
        pos += 1 + used;
      } catch (const std::exception&) {
        throw InvalidInput("bad exponent in rational: " + text);
      }
    }
    if (!any || pos != text.size()) {
      throw InvalidInput("bad rational: " + text);
    }
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10,
                  static_cast<unsigned long>(scale < 0 ? -scale : scale));
    q = scale < 0 ? Rational(digits, ten_pow) : Rational(digits * ten_pow);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  if (q.set_str(text, 10) != 0) throw InvalidInput("bad rational: " + text);
  if (q.get_den() == 0) throw InvalidInput("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational make_rational(int64_t num, int64_t den) {
  Rational q(from_i128(num), from_i128(den));
  q.canonicalize();
  return q;
}

Rational from_int128(__int128 num, __int128 den) {
  Rational q(from_i128(num), from_i128(den));
  q.canonicalize();
  return q;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw InvalidInput("non-finite value");
  return Rational(x);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace votectl
