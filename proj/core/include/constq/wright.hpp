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

// Wright function W_{λ,μ}(z) = Σ z^n / (n! Γ(λn + μ)) and the auxiliary
// functions of the fractional diffusion-wave equation:
//
//   M(r;β) = W_{-β,1-β}(-r),   F(r;β) = W_{-β,0}(-r) = β r M(r;β).

#include <cmath>
#include <limits>
#include <optional>
#include <string_view>

namespace constq::wright {

struct WrightParams {
  double lambda;
  double mu;

  /// Requires λ > -1 and μ > 0.
  WrightParams(double lambda, double mu);
};

enum class Method { series, saddle_point, contour, automatic };

std::string_view to_string(Method m) noexcept;

/// Parses "series", "saddle", "saddle_point", "contour" or "auto".
Method method_from_string(std::string_view name);

struct AuxFunctionParams {
  double beta;
  Method method = Method::automatic;

  /// Requires 0 < β < 1.
  explicit AuxFunctionParams(double beta, Method method = Method::automatic);
};

struct EvalResult {
  double value = 0.0;
  Method method_used = Method::series;
  double est_abs_error = 0.0;
};

struct SeriesOptions {
  int max_terms = 10000;
  /// Cancellation ratio max|term| / |sum| above which the sum is redone in
  /// multiple precision.
  double escalate_ratio = 1e3;
  /// Cancellation ratio above which the series gives up with
  /// NonConvergenceError instead of escalating. Infinite means never.
  double abort_ratio = std::numeric_limits<double>::infinity();
  bool extended_precision = true;
};

/// Direct summation. Terms whose Γ argument is a pole contribute exactly 0.
/// Summation stops once the magnitude envelope of the terms has passed its
/// peak and dropped below 1e-17 of the partial sum.
EvalResult wright_series(const WrightParams& p, double z, const SeriesOptions& opts = {});

/// M(r;β) from its own power series.
EvalResult m_series(double r, double beta, const SeriesOptions& opts = {});

/// F(r;β) from its own power series (starts at n = 1).
EvalResult f_series(double r, double beta, const SeriesOptions& opts = {});

/// Leading-order saddle-point asymptotics of M for large r. Exact at β = 1/2.
/// Throws RegimeError for r < saddle_min_r(β).
EvalResult m_saddle(double r, double beta);

/// Smallest r accepted by m_saddle: the point where the exponent of the
/// asymptotic form reaches 1.
double saddle_min_r(double beta);

/// M(r;β) by quadrature of the Laplace inversion integral along the
/// steepest-descent path through the saddle of s^(β-1) exp(s - r s^β).
EvalResult m_contour(double r, double beta);

/// Matching radius of the automatic policy: the first r = 2 + k/4 at which
/// series and saddle agree to 1e-6 relative, if any is reached before the
/// series cancellation guard trips.
std::optional<double> matching_radius(double beta);

/// M(r;β) with the method chosen by p.method. Results in (-1e-12, 0) are
/// reported as 0.
EvalResult m_aux(double r, const AuxFunctionParams& p);

/// F(r;β). The series method sums the independent F series; other methods
/// return β r M.
EvalResult f_aux(double r, const AuxFunctionParams& p);

/// ∫₀^∞ r^n M(r;β) dr = Γ(n+1)/Γ(βn+1).
double m_moment(int n, double beta);

struct Peak {
  double r0;
  double m0;
};

/// Interior maximum of M(·;β) on (0, 4) for 1/2 < β < 1.
Peak m_peak(double beta);

}  // namespace constq::wright
