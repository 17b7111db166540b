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

#include "exdd/expansion.hpp"
#include "exdd/search.hpp"

namespace {

void BM_ExpandQdd3(benchmark::State& state) {
  const auto seq = exdd::qdd3_sequence();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exdd::expand_product(seq, order).size());
}
BENCHMARK(BM_ExpandQdd3)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_GlobalizationQdd3(benchmark::State& state) {
  const auto ledger = exdd::expand_product(exdd::qdd3_sequence(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(exdd::globalization_report(ledger).verdict);
}
BENCHMARK(BM_GlobalizationQdd3)->Unit(benchmark::kMillisecond);

void BM_SearchFirstOrder(benchmark::State& state) {
  const std::vector<exdd::HamiltonianType> pool{exdd::HamiltonianType(1), exdd::HamiltonianType(2),
                                                exdd::HamiltonianType(3)};
  exdd::SearchOptions o;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(exdd::search_sequences(1, 4, pool, o).size());
}
BENCHMARK(BM_SearchFirstOrder)->Unit(benchmark::kMillisecond);

}  // namespace
