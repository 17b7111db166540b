// Copyright 2026 The exdd Authors
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

#include "benchmark/benchmark.h"

#include "exdd/solver.hpp"

namespace {

void BM_SolveA3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto schedule = exdd::a3_schedule(n);
  const auto guess = exdd::default_guess(schedule.size() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(exdd::solve_times(schedule, n, guess));
}
BENCHMARK(BM_SolveA3)->DenseRange(2, 10, 4);

void BM_SolveS3(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto schedule = exdd::s3_schedule(n);
  const auto guess = exdd::default_guess(schedule.size() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(exdd::solve_times(schedule, n, guess));
}
BENCHMARK(BM_SolveS3)->DenseRange(2, 10, 4);

}  // namespace
