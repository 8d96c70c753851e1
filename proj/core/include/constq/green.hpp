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

#pragma once

// Fundamental solutions of the time-fractional diffusion-wave equation
//
//   ∂^{2β} w / ∂t^{2β} = D ∂²w/∂x²,   0 < β < 1,
//
// for the Cauchy (initial value) and Signalling (boundary value) problems.

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "constq/fractional_calculus.hpp"
#include "constq/wright.hpp"

namespace constq::green {

struct Medium {
  double D;
  double beta;

  /// Requires D > 0 and 0 < β ≤ 1 - 1e-4.
  Medium(double D, double beta);
};

struct SpaceTimePoint {
  double x;
  double t;
};

/// r = |x| / (√D t^β).
double similarity_variable(const SpaceTimePoint& p, const Medium& m);

enum class Problem { cauchy, signalling };

enum class Axis { space_at_fixed_t, time_at_fixed_x };

struct PulseProfile {
  Axis axis;
  double fixed_value;
  std::vector<std::pair<double, double>> samples;
};

/// G_c(x,t) = M(r;β) / (2√D t^β). Even in x. Requires t > 0.
double green_cauchy(const SpaceTimePoint& p, const Medium& m,
                    wright::Method method = wright::Method::automatic);

/// G_s(x,t) = F(r;β) / t. Requires x > 0 and t > 0.
double green_signalling(const SpaceTimePoint& p, const Medium& m,
                        wright::Method method = wright::Method::automatic);

/// 2βx G_c - t G_s, with G_c summed from the M series and G_s from the
/// independent F series.
double reciprocity_residual(const SpaceTimePoint& p, const Medium& m);

struct Comparison {
  double lhs;
  double rhs;
};

struct ScalingCheck {
  Comparison cauchy;      ///< G_c(px, qt) vs q^-β G_c(px/q^β, t)
  Comparison signalling;  ///< G_s(px, qt) vs q^-1 G_s(px/q^β, t)
};

ScalingCheck scaling_check(const SpaceTimePoint& p, const Medium& m, double scale_p,
                           double scale_q);

/// Laplace transforms in time: exp(-(|x|/√D) s^β) / (2√D s^(1-β)) for the
/// Cauchy problem and exp(-(x/√D) s^β) for the Signalling problem.
double green_laplace(double x, double s, const Medium& m, Problem kind);

/// Closed-form heat-equation values at β = 1/2.
struct DiffusionLimit {
  double cauchy;
  double signalling;  ///< NaN when x ≤ 0
};

/// Impulsive wave fronts at β = 1: G_c = [δ(x - ct) + δ(x + ct)]/2 and
/// G_s = δ(t - x/c) with c = √D.
struct WaveLimit {
  double c;
  double front_weight = 0.5;
  double cauchy_front;      ///< |x| position of the two fronts at time t
  double signalling_arrival;  ///< arrival time at position |x|
};

using ClassicalLimit = std::variant<DiffusionLimit, WaveLimit>;

/// Requires β = 1/2 or β = 1 exactly.
ClassicalLimit classical_limits(const SpaceTimePoint& p, double D, double beta);

/// Uniformly sampled spatial data g(x_k), x_k = x0 + k dx.
struct SpatialSamples {
  double x0 = 0.0;
  double dx = 0.0;
  std::vector<double> values;

  double position(std::size_t k) const noexcept { return x0 + static_cast<double>(k) * dx; }
};

/// Samples of a unit-mass spike at `at`: zero everywhere except the node
/// nearest to `at`, whose height makes the trapezoid sum equal 1.
SpatialSamples discrete_delta(double x0, double dx, std::size_t n, double at);

/// Causal time samples of a unit-mass spike at t = 0.
fractional::SampledFunction discrete_time_delta(double dt, std::size_t n);

/// w(x,t) = ∫ G_c(x - ξ, t) g(ξ) dξ by the trapezoid rule on the data
/// grid. The output positions default to the data grid; supplied positions
/// must lie on the data lattice, otherwise GridError.
PulseProfile convolve_cauchy(const SpatialSamples& g, double t, const Medium& m,
                             std::span<const double> x_out = {});

/// w(x,t) = ∫₀^t G_s(x, t - τ) h(τ) dτ by the trapezoid rule, at every
/// node of the time grid of h.
PulseProfile convolve_signalling(const fractional::SampledFunction& h, double x,
                                 const Medium& m);

struct DecayExponents {
  double cauchy_space_exp;       ///< stretched-exponential power 1/(1-β)
  double cauchy_prefactor_power;  ///< (β - 1/2)/(1-β)
  double signalling_time_exp;    ///< algebraic power -(1+β)
};

DecayExponents decay_exponents(const Medium& m);

}  // namespace constq::green
