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

#include "constq/green.hpp"
#include "constq/stable.hpp"

namespace {

using namespace constq;

void BM_GreenCauchy(benchmark::State& state) {
  const green::Medium m(1.0, state.range(0) / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(green::green_cauchy({0.8, 1.0}, m));
}
BENCHMARK(BM_GreenCauchy)->Arg(50)->Arg(75)->Arg(90);

void BM_GreenSignalling(benchmark::State& state) {
  const green::Medium m(1.0, state.range(0) / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(green::green_signalling({1.0, 0.7}, m));
}
BENCHMARK(BM_GreenSignalling)->Arg(50)->Arg(75)->Arg(90);

void BM_ConvolveCauchy(benchmark::State& state) {
  const green::Medium m(1.0, 0.75);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = green::discrete_delta(-3.0, 6.0 / static_cast<double>(n - 1), n, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(green::convolve_cauchy(g, 1.0, m).samples.size());
}
BENCHMARK(BM_ConvolveCauchy)->Arg(201)->Arg(601)->Unit(benchmark::kMillisecond);

// Arguments are y in tenths, then α and θ in hundredths.
void BM_StablePdf(benchmark::State& state) {
  const double y = state.range(0) / 10.0;
  const stable::StableParams p(state.range(1) / 100.0, state.range(2) / 100.0);
  for (auto _ : state) benchmark::DoNotOptimize(stable::stable_pdf(y, p));
}
BENCHMARK(BM_StablePdf)
    ->Args({10, 50, -50})
    ->Args({13, 75, -75})
    ->Args({8, 75, 0})
    ->Args({7, 150, -50})
    ->Args({100, 180, 20});

void BM_LevyMedian(benchmark::State& state) {
  const stable::LevyParams l(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(stable::levy_median(l));
}
BENCHMARK(BM_LevyMedian);

}  // namespace
