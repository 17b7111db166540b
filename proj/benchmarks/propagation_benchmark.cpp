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

#include "exdd/search.hpp"
#include "exdd/simulator.hpp"

namespace {

void BM_SpinBathDiagonalization(benchmark::State& state) {
  const exdd::SpinBathModel model(1);
  for (auto _ : state) benchmark::DoNotOptimize(exdd::SpinBathPropagator(model).dim());
}
BENCHMARK(BM_SpinBathDiagonalization)->Unit(benchmark::kMillisecond);

void BM_QuantumFidelityQdd3(benchmark::State& state) {
  const exdd::SpinBathPropagator prop{exdd::SpinBathModel(1)};
  const auto seq = exdd::qdd3_sequence();
  const auto dfs = exdd::random_dfs_state(2);
  const auto bath = exdd::haar_state(64, 3);
  for (auto _ : state) benchmark::DoNotOptimize(exdd::quantum_fidelity(seq, prop, 1e-9, dfs, bath));
}
BENCHMARK(BM_QuantumFidelityQdd3)->Unit(benchmark::kMillisecond);

void BM_ClassicalFidelityFast(benchmark::State& state) {
  const exdd::ClassicalBathModel bath(4);
  const auto seq = exdd::a3_sequence(static_cast<int>(state.range(0)));
  const auto dfs = exdd::random_dfs_state(5);
  for (auto _ : state) benchmark::DoNotOptimize(exdd::classical_infidelity_fast(seq, bath, 1e-8, dfs));
}
BENCHMARK(BM_ClassicalFidelityFast)->DenseRange(0, 4, 2);

}  // namespace
