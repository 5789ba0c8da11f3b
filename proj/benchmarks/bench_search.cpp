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

#include "votectl/edgectl.hpp"
#include "votectl/gadgets.hpp"
#include "votectl/random_instances.hpp"
#include "votectl/seedctl.hpp"

namespace votectl {
namespace {

void BM_BruteForceSeedingProp1(benchmark::State& state) {
  const Instance in = prop1_greedy_trap();
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_ecs(in, state.range(0)));
}
BENCHMARK(BM_BruteForceSeedingProp1)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_GreedyFamilyProp2(benchmark::State& state) {
  const Instance in = prop2_tree_trap(static_cast<int32_t>(state.range(0)));
  const MessageAlphabet alphabet = single_candidate_alphabet(in.candidate_count(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_family(in, 3, alphabet));
}
BENCHMARK(BM_GreedyFamilyProp2)->Arg(3)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BruteForceRemoval(benchmark::State& state) {
  Rng rng = derive_rng(2026, 0);
  const Instance in = random_single_article_instance(rng, 8, 12, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_ecer(in, Budget::of(state.range(0))));
  }
}
BENCHMARK(BM_BruteForceRemoval)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_UnlimitedRemoval(benchmark::State& state) {
  Rng rng = derive_rng(2026, 0);
  const Instance in = random_single_article_instance(rng, 8, 12, 10);
  for (auto _ : state) benchmark::DoNotOptimize(unlimited_ecer_single(in));
}
BENCHMARK(BM_UnlimitedRemoval)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace votectl

BENCHMARK_MAIN();
