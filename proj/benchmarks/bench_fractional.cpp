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

#include <cmath>
#include <vector>

#include "constq/fractional_calculus.hpp"

namespace {

using namespace constq::fractional;

void BM_CaputoSampled(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double dt = 1.0 / static_cast<double>(n);
  std::vector<double> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = std::pow(static_cast<double>(i) * dt, 2.0);
  const SampledFunction f(dt, v);
  const FractionalOrder order(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(caputo_derivative_sampled(f, order).values.back());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CaputoSampled)->RangeMultiplier(4)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_PowerDerivative(benchmark::State& state) {
  const PowerFunction p(1.0, 2.5);
  const FractionalOrder order(0.7);
  for (auto _ : state)
    benchmark::DoNotOptimize(frac_derivative_power(p, order, DerivativeKind::caputo).coefficient);
}
BENCHMARK(BM_PowerDerivative);

void BM_LaplaceCheck(benchmark::State& state) {
  const PowerFunction p(1.0, 1.0);
  const FractionalOrder order(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(laplace_of_caputo_check(p, order, 2.0).lhs);
}
BENCHMARK(BM_LaplaceCheck)->Unit(benchmark::kMicrosecond);

}  // namespace
