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


#include <cmath>
#include <vector>

#include "constq/errors.hpp"
#include "constq/fractional_calculus.hpp"
#include "test_support.hpp"

using namespace constq;
using namespace constq::fractional;

namespace {

// Reference values computed with mpmath (tests/oracle/generate.py).
constexpr double kTwoOverSqrtPi = 1.1283791670955126;
constexpr double kOneOverSqrtPi = 0.56418958354775629;
constexpr double kG3OverG275 = 1.2435031452925912;

SampledFunction sample(double (*f)(double), double tmax, std::size_t n) {
  const double dt = tmax / static_cast<double>(n);
  std::vector<double> v(n + 1);
  for (std::size_t k = 0; k <= n; ++k) v[k] = f(dt * static_cast<double>(k));
  return SampledFunction(dt, v);
}

double identity(double t) { return t; }
double square(double t) { return t * t; }
double one(double) { return 1.0; }

}  // namespace

TEST_CASE("fractional order derives m") {
  CHECK(FractionalOrder(0.5).m() == 1);
  CHECK(FractionalOrder(1.0).m() == 1);
  CHECK(FractionalOrder(1.3).m() == 2);
  CHECK(FractionalOrder(0.0).m() == 0);
  CHECK_THROWS_AS(FractionalOrder(-0.1), DomainError);
}

TEST_CASE("integral of power functions") {
  const PowerFunction half = frac_integral_power(PowerFunction(1.0, 0.0), FractionalOrder(0.5));
  CHECK_REL(half.coefficient, kTwoOverSqrtPi, 1e-15);
  CHECK(half.exponent == 0.5);

  const PowerFunction same = frac_integral_power(PowerFunction(1.0, 1.0), FractionalOrder(0.0));
  CHECK(same.coefficient == 1.0);
  CHECK(same.exponent == 1.0);

  const PowerFunction twice = frac_integral_power(PowerFunction(1.0, 1.0), FractionalOrder(1.0));
  CHECK_REL(twice.coefficient, 0.5, 1e-15);
  CHECK(twice.exponent == 2.0);

  CHECK_THROWS_AS(PowerFunction(1.0, -1.0), DomainError);
}

TEST_CASE("derivative of power functions") {
  const PowerFunction rl = frac_derivative_power(PowerFunction(1.0, 0.0), FractionalOrder(0.5),
                                                 DerivativeKind::riemann_liouville);
  CHECK_REL(rl.coefficient, kOneOverSqrtPi, 1e-15);
  CHECK(rl.exponent == -0.5);

  const PowerFunction c0 =
      frac_derivative_power(PowerFunction(1.0, 0.0), FractionalOrder(0.5), DerivativeKind::caputo);
  CHECK(c0.is_zero());

  const PowerFunction c1 =
      frac_derivative_power(PowerFunction(1.0, 1.0), FractionalOrder(0.5), DerivativeKind::caputo);
  CHECK_REL(c1.coefficient, kTwoOverSqrtPi, 1e-15);
  CHECK(c1.exponent == 0.5);

  // Integer-order Caputo derivatives of low-degree monomials vanish.
  CHECK(frac_derivative_power(PowerFunction(3.0, 1.0), FractionalOrder(1.5), DerivativeKind::caputo)
            .is_zero());
  // A non-integer exponent below m-1 has no integrable m-th derivative.
  CHECK_THROWS_AS(
      frac_derivative_power(PowerFunction(1.0, 0.5), FractionalOrder(1.7), DerivativeKind::caputo),
      DomainError);
}

TEST_CASE("semigroup of fractional integrals") {
  for (double g : {-0.5, 0.0, 0.5, 2.0})
    for (double a : {0.25, 0.5, 1.3})
      for (double b : {0.25, 0.5, 1.3}) {
        const PowerFunction p(1.0, g);
        const PowerFunction two =
            frac_integral_power(frac_integral_power(p, FractionalOrder(a)), FractionalOrder(b));
        const PowerFunction one_step = frac_integral_power(p, FractionalOrder(a + b));
        CHECK_REL(two.coefficient, one_step.coefficient, 1e-14);
        CHECK(two.exponent == doctest::Approx(one_step.exponent).epsilon(1e-15));
      }
}

TEST_CASE("derivative is a left inverse of the integral") {
  for (double g : {-0.5, 0.0, 1.0, 2.5})
    for (double a : {0.25, 0.5, 1.3}) {
      const PowerFunction p(2.0, g);
      const PowerFunction back = frac_derivative_power(frac_integral_power(p, FractionalOrder(a)),
                                                       FractionalOrder(a),
                                                       DerivativeKind::riemann_liouville);
      CHECK_REL(back.coefficient, 2.0, 1e-12);
      CHECK(back.exponent == doctest::Approx(g).epsilon(1e-15));
    }
}

TEST_CASE("Caputo and Riemann-Liouville agree when initial values vanish") {
  for (double a : {0.3, 0.5, 1.4})
    for (double g : {2.0, 2.5, 3.0}) {
      const FractionalOrder order(a);
      const PowerFunction p(1.0, g);
      const PowerFunction c = frac_derivative_power(p, order, DerivativeKind::caputo);
      const PowerFunction r = frac_derivative_power(p, order, DerivativeKind::riemann_liouville);
      CHECK(c.coefficient == r.coefficient);
      CHECK(c.exponent == r.exponent);
    }
}

TEST_CASE("Riemann-Liouville derivative of t^(alpha-1) is zero") {
  for (double a : {0.25, 0.5, 0.75}) {
    const PowerFunction p(1.0, a - 1.0);
    CHECK(frac_derivative_power(p, FractionalOrder(a), DerivativeKind::riemann_liouville).is_zero());
  }
}

TEST_CASE("Caputo derivative approaches the integer-order limit") {
  // alpha -> 0+: f - f(0+); for f = t that is t itself.
  const PowerFunction d0 =
      frac_derivative_power(PowerFunction(1.0, 1.0), FractionalOrder(1e-8), DerivativeKind::caputo);
  CHECK_CLOSE(d0.coefficient, 1.0, 1e-6);
  CHECK_CLOSE(d0.exponent, 1.0, 1e-6);
  // alpha -> 1+: f' - f'(0+); for f = t^2 that is 2t.
  const PowerFunction d1 = frac_derivative_power(PowerFunction(1.0, 2.0), FractionalOrder(1.0 + 1e-8),
                                                 DerivativeKind::caputo);
  CHECK_CLOSE(d1.coefficient, 2.0, 1e-6);
  CHECK_CLOSE(d1.exponent, 1.0, 1e-6);
}

TEST_CASE("sampled Caputo derivative") {
  SUBCASE("linear function") {
    const SampledFunction d = caputo_derivative_sampled(sample(identity, 1.0, 1000), FractionalOrder(0.5));
    double worst = 0.0;
    for (std::size_t k = 0; k < d.size(); ++k)
      worst = std::max(worst, std::abs(d.values[k] - 2.0 * std::sqrt(d.time(k) / M_PI)));
    CHECK(worst <= 1e-4);
    CHECK_CLOSE(d.values.back(), kTwoOverSqrtPi, 1e-4);
  }
  SUBCASE("constant") {
    const SampledFunction d = caputo_derivative_sampled(sample(one, 1.0, 1000), FractionalOrder(0.5));
    for (double v : d.values) CHECK(std::abs(v) <= 1e-12);
  }
  SUBCASE("square at order 1/4") {
    const SampledFunction d = caputo_derivative_sampled(sample(square, 1.0, 1000), FractionalOrder(0.25));
    CHECK_CLOSE(d.values.back(), kG3OverG275, 1e-4);
  }
  SUBCASE("error falls under refinement") {
    const PowerFunction exact =
        frac_derivative_power(PowerFunction(1.0, 2.0), FractionalOrder(0.5), DerivativeKind::caputo);
    double prev = 0.0;
    for (std::size_t n : {100, 200, 400, 800}) {
      const SampledFunction d = caputo_derivative_sampled(sample(square, 1.0, n), FractionalOrder(0.5));
      const double err = std::abs(d.values.back() - exact(1.0));
      if (prev > 0.0) CHECK(std::log2(prev / err) >= 1.0);
      prev = err;
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(caputo_derivative_sampled(sample(identity, 1.0, 10), FractionalOrder(1.0)),
                    UnsupportedOrderError);
    CHECK_THROWS_AS(caputo_derivative_sampled(sample(identity, 1.0, 10), FractionalOrder(1.5)),
                    UnsupportedOrderError);
    CHECK_THROWS_AS(caputo_derivative_sampled(SampledFunction(0.1, {0.0, 1.0}), FractionalOrder(0.5)),
                    GridError);
    CHECK_THROWS_AS(SampledFunction(0.0, {0.0, 1.0, 2.0}), GridError);
    CHECK_THROWS_AS(SampledFunction(0.1, {0.0}), GridError);
  }
}

TEST_CASE("initial-value correction between the two derivatives") {
  const std::vector<double> zero{0.0};
  const std::vector<double> unit{1.0};
  const std::vector<double> two{2.0};
  CHECK(rl_from_caputo_correction(zero, FractionalOrder(0.5), 1.0) == 0.0);
  CHECK_REL(rl_from_caputo_correction(unit, FractionalOrder(0.5), 1.0), kOneOverSqrtPi, 1e-15);
  CHECK_REL(rl_from_caputo_correction(two, FractionalOrder(0.5), 4.0), kOneOverSqrtPi, 1e-15);

  // RL minus Caputo for f = 1 + t at order 1/2 equals the k = 0 term.
  const FractionalOrder half(0.5);
  const double t = 2.0;
  const double rl = frac_derivative_power(PowerFunction(1.0, 0.0), half, DerivativeKind::riemann_liouville)(t) +
                    frac_derivative_power(PowerFunction(1.0, 1.0), half, DerivativeKind::riemann_liouville)(t);
  const double caputo = frac_derivative_power(PowerFunction(1.0, 1.0), half, DerivativeKind::caputo)(t);
  CHECK_REL(rl - caputo, rl_from_caputo_correction(unit, half, t), 1e-14);

  CHECK_THROWS_AS(rl_from_caputo_correction(unit, FractionalOrder(1.0), 1.0), DomainError);
  CHECK_THROWS_AS(rl_from_caputo_correction(unit, FractionalOrder(1.5), 1.0), DomainError);
}

TEST_CASE("Laplace rule for the Caputo derivative") {
  const LaplaceCheck a = laplace_of_caputo_check(PowerFunction(1.0, 1.0), FractionalOrder(0.5), 1.0);
  CHECK_REL(a.rhs, 1.0, 1e-15);
  CHECK_CLOSE(a.lhs, a.rhs, 1e-6);

  const LaplaceCheck b = laplace_of_caputo_check(PowerFunction(1.0, 0.0), FractionalOrder(0.5), 2.0);
  CHECK_CLOSE(b.rhs, 0.0, 1e-15);
  CHECK_CLOSE(b.lhs, 0.0, 1e-15);

  const LaplaceCheck c = laplace_of_caputo_check(PowerFunction(1.0, 1.0), FractionalOrder(0.5), 4.0);
  CHECK_REL(c.rhs, 0.125, 1e-15);
  CHECK_CLOSE(c.lhs, c.rhs, 1e-6);

  const LaplaceCheck d = laplace_of_caputo_check(PowerFunction(3.0, 1.5), FractionalOrder(0.3), 0.7);
  CHECK_REL(d.lhs, d.rhs, 1e-8);
}
