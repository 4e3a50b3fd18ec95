// Copyright 2026 The Fourier Knots Authors.
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

#include "fourier_knots/crossings.hpp"
#include "fourier_knots/diagram.hpp"
#include "fourier_knots/phase_torus.hpp"

namespace {

using namespace fknot;

void BM_NumericCrossingsSerial(benchmark::State& state) {
  const TorusParams params(3, 7);
  const FourierKnot knot = GenTheoremKnot(params);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(FindCrossingsNumericSerial(knot, grid));
  }
}

void BM_NumericCrossingsParallel(benchmark::State& state) {
  const TorusParams params(3, 7);
  const FourierKnot knot = GenTheoremKnot(params);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(FindCrossingsNumeric(knot, grid));
  }
}

void BM_PhaseMapSerial(benchmark::State& state) {
  const TorusParams params(3, 5);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RenderPhaseMapSerial(params, grid));
  }
}

void BM_PhaseMapParallel(benchmark::State& state) {
  const TorusParams params(3, 5);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RenderPhaseMap(params, grid));
  }
}

void BM_AlexanderFromDiagram(benchmark::State& state) {
  const TorusParams params(2, static_cast<int>(state.range(0)));
  const FourierKnot knot = GenTheoremKnot(params);
  const PDCode pd =
      PDFromGauss(BuildGaussCode(FindCrossingsAnalytic(knot, params)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(AlexanderFromDiagram(pd));
  }
}

}  // namespace

BENCHMARK(BM_NumericCrossingsSerial)->Arg(512)->Arg(2048);
BENCHMARK(BM_NumericCrossingsParallel)->Arg(512)->Arg(2048);
BENCHMARK(BM_PhaseMapSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_PhaseMapParallel)->Arg(64)->Arg(256);
BENCHMARK(BM_AlexanderFromDiagram)->Arg(7)->Arg(19);

BENCHMARK_MAIN();
