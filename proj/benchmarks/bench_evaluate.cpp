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

#include <benchmark/benchmark.h>

#include "bench_common.hpp"
#include "votectl/evaluate.hpp"
#include "votectl/gadgets.hpp"

namespace votectl::bench {
namespace {

void BM_ExactExpectedMov(benchmark::State& state) {
  const Instance in = coin_line(static_cast<int32_t>(state.range(0)) + 1);
  EvalConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_mov(in, *in.baseline, {}, config));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExactExpectedMov)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

void BM_MonteCarloExpectedMov(benchmark::State& state) {
  const Instance in = coin_line(64);
  EvalConfig config;
  config.mode = Mode::kMonteCarlo;
  config.samples = state.range(0);
  config.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_mov(in, *in.baseline, {}, config));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloExpectedMov)->RangeMultiplier(10)->Range(1000, 100000)
    ->Unit(benchmark::kMillisecond);

void BM_Example2Exact(benchmark::State& state) {
  const Instance in = example2_diamond();
  const SeedAssignment seeds = *in.baseline;
  const EdgeDelta cut = EdgeDelta::removal({{2, 3}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_mov(in, seeds, cut, {}));
  }
}
BENCHMARK(BM_Example2Exact);

}  // namespace
}  // namespace votectl::bench

BENCHMARK_MAIN();
