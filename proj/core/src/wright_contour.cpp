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

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cfloat>
#include <cmath>
#include <algorithm>
#include <complex>
#include <iterator>
#include <limits>
#include <numbers>
#include <string>

#include "constq/errors.hpp"
#include "constq/wright.hpp"

// M(r;β) = (1/2πi) ∫_Ha e^{σ - rσ^β} σ^(β-1) dσ. The path used here is the
// curve through the real saddle σ_s = (rβ)^{1/(1-β)} on which the imaginary
// part of σ^β is kept proportional to that of σ:
//
//   σ(θ) = λ ρ(θ) e^{iθ},  ρ(θ) = (sin βθ / β sin θ)^{1/(1-β)} · const,
//
// for 0 ≤ θ < π, with λ = max(σ_s, 1) so that r → 0 still yields a Hankel
// loop of unit size. Everything is carried in logarithms; for β near 1 the
// radius grows like ρ^{1/(1-β)} and leaves double range long before θ = π,
// where the integrand is already negligible.

namespace constq::wright {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegligible = -50.0;
constexpr int kScan = 256;

// cot x - 1/x = -Σ c_k x^(2k-1) with c_k = 2ζ(2k)/π^(2k).
constexpr double kCot[] = {
    0.33333333333333333,
    0.022222222222222222,
    0.0021164021164021164,
    0.00021164021164021164,
    2.1377799155576933e-5,
    2.1644042808063972e-6,
    2.1925947851873778e-7,
    2.2214608789979679e-8,
    2.2507846516808993e-9,
    2.2805151204592183e-10,
    2.3106432599002624e-11,
    2.3411706819824884e-12,
    2.3721017400233654e-13,
    2.4034415333307706e-14,
    2.4351954029183369e-15,
    2.4673688045172075e-16,
    2.4999672771220809e-17,
    2.5329964357406348e-18,
    2.5664619702826287e-19,
    2.6003696460137274e-20,
    2.6347253044153801e-21,
    2.669534864157395e-22,
    2.704804322109031e-23,
    2.7405397543699513e-24,
    2.7767473173164435e-25,
    2.8134332486618794e-26,
    2.8506038685312918e-27,
    2.8882655805501748e-28,
    2.9264248729476758e-29,
    2.9650883196743643e-30};

// Below this angle both path functions are summed from their power series
// in θ, which carry the factor (1 - β^(2k))/(1 - β) exactly and so avoid the
// 1/(1-β) cancellation of the closed forms.
constexpr double kSeriesAngle = 1.5;

// log ρ(θ) = log(sin βθ / β sin θ) / (1-β).
double log_radius(double th, double b) {
  if (th < kSeriesAngle) {
    const double t2 = th * th;
    double sum = 0.0, s = 0.0, bp = 1.0, tp = 1.0;
    for (std::size_t k = 1; k <= std::size(kCot); ++k) {
      s += bp * (1.0 + b);
      bp *= b * b;
      tp *= t2;
      const double term = kCot[k - 1] / (2.0 * k) * s * tp;
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return sum;
  }
  // sin βθ / (β sin θ) - 1 with the O(1-β) numerator formed directly.
  const double q = 1.0 - b;
  const double x = (q * std::sin(th) - 2.0 * std::cos(th - 0.5 * q * th) * std::sin(0.5 * q * th)) /
                   (b * std::sin(th));
  return std::log1p(x) / q;
}

// ρ'/ρ.
double log_radius_slope(double th, double b) {
  if (th < kSeriesAngle) {
    const double t2 = th * th;
    double sum = 0.0, s = 0.0, bp = 1.0, tp = th;
    for (std::size_t k = 1; k <= std::size(kCot); ++k) {
      s += bp * (1.0 + b);
      bp *= b * b;
      const double term = kCot[k - 1] * s * tp;
      sum += term;
      if (term <= 1e-18 * sum) break;
      tp *= t2;
    }
    return sum;
  }
  const double q = 1.0 - b;
  return (std::sin(q * th) - q * std::cos(b * th) * std::sin(th)) /
         (q * std::sin(b * th) * std::sin(th));
}

}  // namespace

EvalResult m_contour(double r, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("m_contour: beta must lie in (0,1)");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("m_contour: r must be >= 0");

  const double b = beta;
  const double q = 1.0 - b;
  const double log_saddle = r > 0.0 ? std::log(r * b) / q : -std::numeric_limits<double>::infinity();
  const double log_lam = std::max(log_saddle, 0.0);
  const double lam = std::exp(log_lam);
  const double kappa = r > 0.0 ? std::exp(q * (log_saddle - log_lam)) : 0.0;
  const double a0 = lam * (b - kappa) / b;
  const double log_pref = b * log_lam + a0;
  if (log_pref < -795.0) return {0.0, Method::contour, 0.0};

  // Log-modulus of the integrand relative to its value at θ = 0, and the
  // phase contribution of the exponential.
  struct Point {
    double e;
    double phase;
  };
  auto point = [&](double th) -> Point {
    const double lr = log_radius(th, b);
    if (lr > 700.0) return {-std::numeric_limits<double>::infinity(), 0.0};
    const double rho = std::exp(lr);
    double re_a;
    if (th == 0.0) {
      re_a = -lam * (q - (1.0 - kappa)) / b;
    } else {
      re_a = -lam * rho * (std::sin(q * th) - (1.0 - kappa) * std::cos(b * th) * std::sin(th)) /
             std::sin(b * th);
    }
    const double im_a = lam * rho * std::sin(th) * (1.0 - kappa);
    return {b * lr + re_a - a0, im_a};
  };

  auto integrand = [&](double th) -> double {
    if (th >= kPi) return 0.0;
    const auto [e, im_a] = point(th);
    if (e < -745.0) return 0.0;
    const std::complex<double> z =
        std::exp(e) * std::polar(1.0, im_a + b * th) *
        std::complex<double>(log_radius_slope(th, b), 1.0);
    return z.imag();
  };

  // Truncate the path where the integrand has fallen below e^-50 of its
  // value at θ = 0 for good, so the first Kronrod estimate already sees the
  // peak and sets a meaningful tolerance.
  double upper = kPi;
  for (int i = kScan - 1; i > 0; --i) {
    const double th = kPi * i / kScan;
    if (point(th).e > kNegligible) break;
    upper = th;
  }

  // Re a - a0 is a difference of two O(λ) terms, so the integrand carries
  // rounding noise of relative size λε. The integral can also be much smaller
  // than its L1 norm when the phase turns, so the tolerance is set against a
  // first estimate of the L1 norm; asking for more makes the adaptive rule
  // bisect down to its depth limit.
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double noise = std::max(1e-13, 32.0 * DBL_EPSILON * lam);
  double err = 0.0;
  double l1 = 0.0;
  const double rough = GK::integrate(integrand, 0.0, upper, 0, 0.0, &err, &l1);
  const double rel_tol =
      rough != 0.0 ? std::max(noise, noise * l1 / std::abs(rough)) : noise;
  const double v = GK::integrate(integrand, 0.0, upper, 20, rel_tol, &err, &l1);
  if (!std::isfinite(v) || err > 1e-6 * std::max(l1, 1e-300))
    throw QuadratureError("m_contour: inversion integral did not converge (r=" +
                          std::to_string(r) + ", beta=" + std::to_string(beta) +
                          ", error estimate " + std::to_string(err) + " of L1 " +
                          std::to_string(l1) + ")");
  const double scale = std::exp(log_pref) / kPi;
  return {scale * v, Method::contour, scale * err + 4.0 * DBL_EPSILON * scale * l1};
}

}  // namespace constq::wright
