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

#include "constq/fractional_calculus.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>
#include <string>

#include "constq/errors.hpp"
#include "constq/quadrature.hpp"
#include "constq/special.hpp"

namespace constq::fractional {

namespace {

PowerFunction make_power(double c, double gamma) {
  PowerFunction p;
  p.coefficient = c;
  p.exponent = gamma;
  return p;
}

PowerFunction zero_function() { return make_power(0.0, 0.0); }

bool is_whole(double x) { return x == std::floor(x); }

void require_derivative_order(const FractionalOrder& order, const char* who) {
  if (!(order.alpha() > 0.0))
    throw DomainError(std::string(who) + ": derivative order must be > 0");
  if (order.alpha() >= 1.0)
    throw UnsupportedOrderError(std::string(who) + ": only 0 < alpha < 1 is supported, got " +
                                std::to_string(order.alpha()));
}

}  // namespace

FractionalOrder::FractionalOrder(double alpha) : alpha_(alpha), m_(0) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw DomainError("FractionalOrder: alpha must be finite and >= 0, got " +
                      std::to_string(alpha));
  m_ = static_cast<int>(std::ceil(alpha));
}

PowerFunction::PowerFunction(double c, double gamma) : coefficient(c), exponent(gamma) {
  if (!(gamma > -1.0))
    throw DomainError("PowerFunction: exponent must be > -1, got " + std::to_string(gamma));
}

double PowerFunction::operator()(double t) const {
  if (coefficient == 0.0 || t < 0.0) return 0.0;
  return coefficient * std::pow(t, exponent);
}

SampledFunction::SampledFunction(double step, std::vector<double> samples,
                                 std::vector<double> initial)
    : dt(step), values(std::move(samples)), initial_derivatives(std::move(initial)) {
  if (!(dt > 0.0)) throw GridError("SampledFunction: dt must be > 0");
  if (values.size() < 2) throw GridError("SampledFunction: at least 2 samples are required");
}

PowerFunction frac_integral_power(const PowerFunction& p, FractionalOrder order) {
  if (!(p.exponent > -1.0)) throw DomainError("frac_integral_power: exponent must be > -1");
  const double a = order.alpha();
  if (a == 0.0) return p;
  const double g = p.exponent;
  return make_power(p.coefficient * special::gamma_ratio(g + 1.0, g + 1.0 + a), g + a);
}

PowerFunction frac_derivative_power(const PowerFunction& p, FractionalOrder order,
                                    DerivativeKind kind) {
  if (!(p.exponent > -1.0)) throw DomainError("frac_derivative_power: exponent must be > -1");
  const double a = order.alpha();
  if (a == 0.0) return p;
  const double g = p.exponent;

  if (kind == DerivativeKind::caputo) {
    const int m = order.m();
    if (is_whole(g) && g <= m - 1) return zero_function();
    if (!is_whole(g) && g < m - 1)
      throw DomainError("frac_derivative_power: Caputo derivative of t^" + std::to_string(g) +
                        " of order " + std::to_string(a) +
                        " needs a non-integrable derivative of order m");
  }

  const double c = p.coefficient * special::gamma_ratio(g + 1.0, g + 1.0 - a);
  if (c == 0.0) return zero_function();
  return make_power(c, g - a);
}

SampledFunction caputo_derivative_sampled(const SampledFunction& f, FractionalOrder order) {
  require_derivative_order(order, "caputo_derivative_sampled");
  if (!(f.dt > 0.0)) throw GridError("caputo_derivative_sampled: dt must be > 0");
  const std::size_t n = f.values.size();
  if (n < 3) throw GridError("caputo_derivative_sampled: at least 3 samples are required");

  const double a = order.alpha();
  const double p = 1.0 - a;
  std::vector<double> b(n);
  for (std::size_t k = 0; k < n; ++k)
    b[k] = std::pow(static_cast<double>(k + 1), p) - std::pow(static_cast<double>(k), p);

  std::vector<double> diff(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) diff[j] = f.values[j + 1] - f.values[j];

  const double scale = std::pow(f.dt, -a) * special::rgamma(2.0 - a);
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < i; ++j) acc += b[i - j - 1] * diff[j];
    out[i] = scale * acc;
  }
  return SampledFunction(f.dt, std::move(out));
}

double rl_from_caputo_correction(std::span<const double> initial_values, FractionalOrder order,
                                 double t) {
  if (order.is_integer())
    throw DomainError("rl_from_caputo_correction: alpha must not be an integer");
  if (initial_values.size() != static_cast<std::size_t>(order.m()))
    throw DomainError("rl_from_caputo_correction: expected " + std::to_string(order.m()) +
                      " initial values, got " + std::to_string(initial_values.size()));
  if (!(t > 0.0)) throw DomainError("rl_from_caputo_correction: t must be > 0");
  double sum = 0.0;
  for (std::size_t k = 0; k < initial_values.size(); ++k) {
    const double e = static_cast<double>(k) - order.alpha();
    sum += std::pow(t, e) * special::rgamma(e + 1.0) * initial_values[k];
  }
  return sum;
}

LaplaceCheck laplace_of_caputo_check(const PowerFunction& f, FractionalOrder order, double s) {
  require_derivative_order(order, "laplace_of_caputo_check");
  if (!(s > 0.0)) throw DomainError("laplace_of_caputo_check: s must be > 0");
  const double a = order.alpha();
  const double c = f.coefficient;
  const double g = f.exponent;
  if (g < 0.0)
    throw DomainError("laplace_of_caputo_check: f(0+) must be finite");

  // Caputo derivative from its defining integral
  //   D_*^α f(t) = 1/Γ(1-α) ∫₀^t f'(τ) (t-τ)^(-α) dτ,
  // which τ = t u turns into t^(γ-α) times a fixed integral over [0,1]. The
  // second argument of the integrand is the signed distance to the nearer
  // endpoint, so u and 1 - u stay exact at both singular ends.
  double unit = 0.0;
  if (c != 0.0 && g != 0.0) {
    auto integrand = [&](double u, double dist) {
      const double left = dist < 0.0 ? -dist : u;
      const double right = dist > 0.0 ? dist : 1.0 - u;
      return c * g * std::pow(left, g - 1.0) * std::pow(right, -a);
    };
    boost::math::quadrature::tanh_sinh<double> ts;
    double err = 0.0;
    double l1 = 0.0;
    unit = ts.integrate(integrand, 0.0, 1.0, 1e-14, &err, &l1) * special::rgamma(1.0 - a);
    if (!std::isfinite(unit) || err > 1e-10 * l1)
      throw QuadratureError("laplace_of_caputo_check: Caputo integral did not converge");
  }
  auto caputo = [&](double t) { return t > 0.0 ? unit * std::pow(t, g - a) : 0.0; };

  quad::Options outer;
  outer.rel_tol = 1e-10;
  const double lhs =
      quad::integrate_to_infinity([&](double t) { return std::exp(-s * t) * caputo(t); }, 0.0,
                                  1.0 / s, outer)
          .value;

  const double f_tilde = c * std::tgamma(g + 1.0) * std::pow(s, -(g + 1.0));
  const double f0 = (g == 0.0) ? c : 0.0;
  const double rhs = std::pow(s, a) * f_tilde - f0 * std::pow(s, a - 1.0);
  return {lhs, rhs};
}

}  // namespace constq::fractional
