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

#include <functional>
#include <span>

namespace constq::quad {

using Integrand = std::function<double(double)>;

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
};

struct Options {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  unsigned max_depth = 18;
  /// Semi-infinite integrals stop once the integrand has fallen below
  /// envelope_ratio times the largest magnitude seen.
  double envelope_ratio = 1e-14;
  int max_panels = 400;
};

/// Adaptive Gauss-Kronrod on [a, b]. Throws QuadratureError when the error
/// estimate exceeds the tolerance by more than a small factor.
Result integrate(const Integrand& f, double a, double b, const Options& opts = {});

/// Adaptive Gauss-Kronrod over consecutive breakpoints.
Result integrate(const Integrand& f, std::span<const double> breakpoints,
                 const Options& opts = {});

/// Tanh-sinh on [a, b]; tolerates integrable endpoint singularities.
Result integrate_singular(const Integrand& f, double a, double b, const Options& opts = {});

/// ∫_a^∞ f. The first panel [a, a + first_width] uses tanh-sinh, the rest
/// are Gauss-Kronrod panels of doubling width, truncated where the integrand
/// envelope falls below opts.envelope_ratio times its peak.
Result integrate_to_infinity(const Integrand& f, double a, double first_width,
                             const Options& opts = {});

/// ∫_a^∞ f for integrands with algebraic decay, by double-exponential
/// (exp-sinh) quadrature.
Result integrate_algebraic_tail(const Integrand& f, double a, const Options& opts = {});

}  // namespace constq::quad
