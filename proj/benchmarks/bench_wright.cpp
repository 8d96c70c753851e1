// Copyright 2026 The constq-waves Authors
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

#include "constq/wright.hpp"

namespace {

using namespace constq::wright;

// Arguments are r and β in hundredths.
void BM_MSeries(benchmark::State& state) {
  const double r = state.range(0) / 100.0;
  const double b = state.range(1) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(m_series(r, b).value);
}
BENCHMARK(BM_MSeries)->Args({100, 50})->Args({200, 75})->Args({400, 50})->Args({400, 75});

void BM_MContour(benchmark::State& state) {
  const double r = state.range(0) / 100.0;
  const double b = state.range(1) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(m_contour(r, b).value);
}
BENCHMARK(BM_MContour)->Args({100, 50})->Args({400, 75})->Args({300, 99})->Args({800, 25});

void BM_MSaddle(benchmark::State& state) {
  const double r = state.range(0) / 100.0;
  const double b = state.range(1) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(m_saddle(r, b).value);
}
BENCHMARK(BM_MSaddle)->Args({400, 50})->Args({600, 75});

void BM_MAuto(benchmark::State& state) {
  const AuxFunctionParams p(state.range(1) / 100.0);
  const double r = state.range(0) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(m_aux(r, p).value);
}
BENCHMARK(BM_MAuto)->Args({100, 75})->Args({300, 75})->Args({100, 99});

void BM_MPeak(benchmark::State& state) {
  const double b = 1.0 - state.range(0) / 1000.0;
  for (auto _ : state) benchmark::DoNotOptimize(m_peak(b).r0);
}
BENCHMARK(BM_MPeak)->Arg(10)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
