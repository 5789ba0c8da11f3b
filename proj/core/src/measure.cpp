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

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "engine.hpp"
#include "votectl/errors.hpp"

namespace votectl::detail {

namespace {

constexpr int kHardEnumerationLimit = 40;
constexpr __int128 kFastDenominatorLimit = static_cast<__int128>(1) << 62;

bool fits_int64(const mpz_class& z) { return z.fits_slong_p() != 0; }

}  // namespace

int resolve_workers(int requested) {
  return requested > 0 ? requested : default_workers();
}

Measure::Measure(const Engine& engine, const std::vector<uint8_t>& support,
                 const EvalConfig& config) {
  const auto& universe = engine.universe();
  certain_.assign(universe.size(), 0);
  for (size_t e = 0; e < universe.size(); ++e) {
    if (!support[e]) continue;
    const Rational& p = universe[e].p;
    if (p >= 1) {
      certain_[e] = 1;
    } else if (p > 0) {
      random_.push_back(static_cast<int32_t>(e));
    }
  }
  const size_t r = random_.size();
  const int cap = std::min(config.enumeration_cap, kHardEnumerationLimit);
  exact_ = config.mode == Mode::kExact;
  if (exact_ && static_cast<int>(r) > cap) {
    if (!config.monte_carlo_fallback) {
      throw CapExceeded(
          "exact enumeration over " + std::to_string(r) +
              " random edges; use Monte Carlo mode",
          static_cast<double>(r), cap);
    }
    exact_ = false;
  }

  if (exact_) {
    count_ = static_cast<size_t>(1) << r;
    __int128 den = 1;
    for (int32_t e : random_) {
      const Rational& p = universe[e].p;
      if (!fits_int64(p.get_num()) || !fits_int64(p.get_den())) {
        fast_ = false;
        break;
      }
      den *= p.get_den().get_si();
      if (den > kFastDenominatorLimit) {
        fast_ = false;
        break;
      }
    }
    if (fast_) {
      fast_den_ = static_cast<int64_t>(den);
      // Doubling: outcome k includes random edge j iff bit j of k is set.
      fast_num_.assign(count_, 0);
      fast_num_[0] = 1;
      size_t filled = 1;
      for (int32_t e : random_) {
        const Rational& p = universe[e].p;
        int64_t a = p.get_num().get_si();
        int64_t b = p.get_den().get_si();
        for (size_t k = 0; k < filled; ++k) {
          int64_t w = fast_num_[k];
          fast_num_[k] = w * (b - a);
          fast_num_[k + filled] = w * a;
        }
        filled *= 2;
      }
    } else {
      slow_weight_.assign(count_, 0);
      slow_weight_[0] = 1;
      size_t filled = 1;
      for (int32_t e : random_) {
        const Rational& p = universe[e].p;
        Rational q = 1 - p;
        for (size_t k = 0; k < filled; ++k) {
          Rational w = slow_weight_[k];
          slow_weight_[k] = w * q;
          slow_weight_[k + filled] = w * p;
        }
        filled *= 2;
      }
    }
    return;
  }

  if (config.samples <= 0) throw InvalidInput("samples must be positive");
  count_ = static_cast<size_t>(config.samples);
  words_ = (r + 63) / 64;
  samples_.assign(count_ * words_, 0);
  fast_ = true;
  fast_den_ = config.samples;
  fast_num_.assign(count_, 1);
  for (size_t chunk = 0; chunk * kChunk < count_; ++chunk) {
    Rng rng = derive_rng(config.seed, chunk);
    size_t end = std::min(count_, (chunk + 1) * kChunk);
    for (size_t i = chunk * kChunk; i < end; ++i) {
      uint64_t* bits = samples_.data() + i * words_;
      for (size_t j = 0; j < r; ++j) {
        if (draw_bernoulli(rng, universe[random_[j]].p)) {
          bits[j / 64] |= uint64_t{1} << (j % 64);
        }
      }
    }
  }
}

bool Measure::random_bit(size_t k, size_t j) const {
  if (exact_) return (k >> j) & 1;
  return (samples_[k * words_ + j / 64] >> (j % 64)) & 1;
}

void Measure::fill(size_t k, std::vector<uint8_t>& live) const {
  live = certain_;
  for (size_t j = 0; j < random_.size(); ++j) {
    if (random_bit(k, j)) live[random_[j]] = 1;
  }
}

Rational Measure::weight(size_t k) const {
  if (fast_) return make_rational(fast_num_[k], fast_den_);
  return slow_weight_[k];
}

void Accumulator::add(const Measure& m, size_t k, int64_t v) {
  if (v == 0) return;
  if (m.fast()) {
    fast_ += static_cast<__int128>(m.fast_weight(k)) * v;
  } else {
    slow_ += m.weight(k) * v;
  }
}

void Accumulator::merge(const Accumulator& other) {
  fast_ += other.fast_;
  slow_ += other.slow_;
}

Rational Accumulator::result(const Measure& m) const {
  if (m.fast()) return from_int128(fast_, m.fast_denominator());
  return slow_;
}

int Accumulator::compare(const Accumulator& other) const {
  if (fast_ != other.fast_) return fast_ < other.fast_ ? -1 : 1;
  return cmp(slow_, other.slow_) < 0 ? -1 : (slow_ == other.slow_ ? 0 : 1);
}

}  // namespace votectl::detail
