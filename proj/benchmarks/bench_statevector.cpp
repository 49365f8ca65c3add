// Copyright 2026 The ppm Authors
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

#include <random>

#include "ppm/pgraph.hpp"
#include "ppm/statevector.hpp"

using namespace ppm;

static void BM_ParityPhase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  Statevector s = Statevector::random(n, rng);
  for (auto _ : state) {
    s.apply_parity_phase(0, n - 1, 0.3);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.dimension()));
}
BENCHMARK(BM_ParityPhase)->Arg(10)->Arg(16)->Arg(20);

static void BM_Hadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  Statevector s = Statevector::random(n, rng);
  for (auto _ : state) {
    s.apply_h(n / 2);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.dimension()));
}
BENCHMARK(BM_Hadamard)->Arg(10)->Arg(16)->Arg(20);

static void BM_MeasureX(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  Statevector s = Statevector::random(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(measure(s, n / 2, Basis::X, 0));
}
BENCHMARK(BM_MeasureX)->Arg(10)->Arg(16)->Arg(20);

static void BM_PrepareResource(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PGraph g(n, 2);
  for (int v = 0; v + 1 < n; ++v) g.connect(v, v + 1, 2);
  for (int v = 0; v + 2 < n; v += 2) g.connect(v, v + 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(prepare_resource(g));
}
BENCHMARK(BM_PrepareResource)->Arg(12)->Arg(16);
