// Copyright 2026 The pgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "pgame/coco.hpp"
#include "pgame/generate.hpp"
#include "pgame/linalg.hpp"
#include "pgame/mixed_equilibria.hpp"
#include "pgame/periodicity.hpp"

namespace {

pgame::Game Generate(std::vector<std::size_t> counts, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return pgame::random_game(counts, -9, 9, rng);
}

void BM_BuildGraph(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const pgame::Game game = Generate({n, n, n}, 7);
  for (auto _ : state) {
    auto graph = pgame::build_periodicity_graph(game, pgame::TiePolicy::kLexicographic);
    benchmark::DoNotOptimize(graph);
  }
}
BENCHMARK(BM_BuildGraph)->Arg(3)->Arg(6)->Arg(10);

void BM_PeriodicActions(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const pgame::Game game = Generate({n, n}, 11);
  for (auto _ : state) {
    auto sets = pgame::periodic_actions(game, pgame::TiePolicy::kLexicographic);
    benchmark::DoNotOptimize(sets);
  }
}
BENCHMARK(BM_PeriodicActions)->Arg(8)->Arg(32);

void BM_SupportEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const pgame::Game game = Generate({n, n}, 3);
  for (auto _ : state) {
    auto equilibria = pgame::nash_support_enumeration(game);
    benchmark::DoNotOptimize(equilibria);
  }
}
BENCHMARK(BM_SupportEnumeration)->Arg(3)->Arg(4)->Arg(6)
    ->Unit(benchmark::kMillisecond);

void BM_ZeroSumValue(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-20, 20);
  pgame::Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = pgame::Rational(std::int64_t{dist(rng)});
  for (auto _ : state) {
    auto solution = pgame::zero_sum_value(m);
    benchmark::DoNotOptimize(solution);
  }
}
BENCHMARK(BM_ZeroSumValue)->Arg(4)->Arg(8)->Arg(16);

void BM_CocoSolution(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const pgame::Game game = Generate({n, n}, 9);
  for (auto _ : state) {
    auto solution = pgame::coco_solution(game);
    benchmark::DoNotOptimize(solution);
  }
}
BENCHMARK(BM_CocoSolution)->Arg(4)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
