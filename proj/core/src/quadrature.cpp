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

#include "constq/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "constq/errors.hpp"

namespace constq::quad {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

// Boost's Gauss-Kronrod estimate is |K61 - G30|, which is far larger than the
// true error once converged; only gross misses are reported.
constexpr double kSlack = 1e4;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void check(const char* what, double value, double err, double l1, const Options& opts) {
  if (!std::isfinite(value))
    throw QuadratureError(std::string(what) + ": non-finite integral");
  const double allowed = std::max(opts.abs_tol, opts.rel_tol * l1) * kSlack;
  if (err > allowed && err > 1e-300)
    throw QuadratureError(std::string(what) + ": error estimate " + sci(err) +
                          " exceeds tolerance " + std::to_string(allowed));
}

}  // namespace

Result integrate(const Integrand& f, double a, double b, const Options& opts) {
  if (a == b) return {};
  double err = 0.0;
  double l1 = 0.0;
  // The Boost rule only takes a relative tolerance; an absolute one is
  // folded in through a first, unrefined estimate.
  double rel_tol = opts.rel_tol;
  if (opts.abs_tol > 0.0) {
    const double rough = std::abs(GK::integrate(f, a, b, 0, 0.0, &err, &l1));
    rel_tol = rough > 0.0 ? std::max(rel_tol, opts.abs_tol / rough) : 1.0;
  }
  const double v = GK::integrate(f, a, b, opts.max_depth, rel_tol, &err, &l1);
  check("gauss-kronrod", v, err, l1, opts);
  return {v, err};
}

Result integrate(const Integrand& f, std::span<const double> breakpoints, const Options& opts) {
  Result total;
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    const Result r = integrate(f, breakpoints[i - 1], breakpoints[i], opts);
    total.value += r.value;
    total.abs_error += r.abs_error;
  }
  return total;
}

Result integrate_singular(const Integrand& f, double a, double b, const Options& opts) {
  if (a == b) return {};
  boost::math::quadrature::tanh_sinh<double> ts;
  double err = 0.0;
  double l1 = 0.0;
  const double v = ts.integrate(f, a, b, opts.rel_tol, &err, &l1);
  check("tanh-sinh", v, err, l1, opts);
  return {v, err};
}

Result integrate_to_infinity(const Integrand& f, double a, double first_width,
                             const Options& opts) {
  if (!(first_width > 0.0)) throw DomainError("integrate_to_infinity: first_width must be > 0");
  double peak = 0.0;
  auto tracked = [&](double x) {
    const double v = f(x);
    peak = std::max(peak, std::abs(v));
    return v;
  };

  Result total = integrate_singular(tracked, a, a + first_width, opts);
  double lo = a + first_width;
  double width = first_width;
  for (int panel = 1; panel < opts.max_panels; ++panel) {
    const double hi = lo + width;
    const Result r = integrate(tracked, lo, hi, opts);
    total.value += r.value;
    total.abs_error += r.abs_error;
    const double edge = std::abs(f(hi));
    const double cutoff = opts.envelope_ratio * peak;
    if (edge <= cutoff && std::abs(r.value) <= opts.envelope_ratio * std::abs(total.value))
      return total;
    if (peak == 0.0 && panel >= 3) return total;
    lo = hi;
    width *= 2.0;
  }
  throw QuadratureError("integrate_to_infinity: integrand not negligible after " +
                        std::to_string(opts.max_panels) + " panels");
}

Result integrate_algebraic_tail(const Integrand& f, double a, const Options& opts) {
  boost::math::quadrature::exp_sinh<double> es;
  double err = 0.0;
  double l1 = 0.0;
  const double v = es.integrate([&](double u) { return f(a + u); }, opts.rel_tol, &err, &l1);
  check("exp-sinh", v, err, l1, opts);
  return {v, err};
}

}  // namespace constq::quad
