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

#include "ppm/compiler.hpp"
#include "ppm/fragments.hpp"
#include "ppm/gates.hpp"
#include "ppm/verifier.hpp"

using namespace ppm;

static VerifyOptions quiet() {
  VerifyOptions o;
  o.keep_branches = false;
  return o;
}

static void BM_VerifyET(benchmark::State& state) {
  PatternFragment f = e_fragment(EMode::T);
  for (auto _ : state) benchmark::DoNotOptimize(verify_fragment(f, gates::T(), quiet()));
}
BENCHMARK(BM_VerifyET);

static void BM_VerifyHierarchy(benchmark::State& state) {
  PatternFragment f = hierarchy_fragment(static_cast<int>(state.range(0)));
  Matrix u = gates::zrot(M_PI / std::ldexp(1.0, static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_fragment(f, u, quiet()));
}
BENCHMARK(BM_VerifyHierarchy)->DenseRange(1, 4);

static void BM_VerifyBrick(benchmark::State& state) {
  BrickSettings s{LaneGate::T, LaneGate::HTH, true};
  PatternFragment f = brick(s);
  for (auto _ : state) benchmark::DoNotOptimize(verify_fragment(f, s.unitary(), quiet()));
}
BENCHMARK(BM_VerifyBrick)->Unit(benchmark::kMillisecond);

static void BM_InferCorrectionsBrick(benchmark::State& state) {
  BrickSettings s{LaneGate::H, LaneGate::HTH, false};
  PatternFragment f = brick(s);
  for (auto _ : state) benchmark::DoNotOptimize(infer_corrections(f, s.unitary(), quiet()));
}
BENCHMARK(BM_InferCorrectionsBrick)->Unit(benchmark::kMillisecond);

static void BM_CompileAndLayout(benchmark::State& state) {
  Circuit c = parse_circuit("qubits 2\nH 0\nT 0\nCNOT 0 1\nTdg 1\nS 0\nCZ 0 1\n");
  for (auto _ : state) benchmark::DoNotOptimize(layout_brickwork(compile_to_bricks(c)));
}
BENCHMARK(BM_CompileAndLayout)->Unit(benchmark::kMillisecond);
