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

#include "constq/special.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace constq::special {

namespace {
// Beyond this |x|, tgamma overflows or underflows and log-gamma is used.
constexpr double kDirectGammaLimit = 170.0;
}  // namespace

bool is_nonpositive_integer(double x) noexcept {
  return x <= 0.0 && x == std::floor(x);
}

double sin_pi(double x) noexcept {
  if (x == std::floor(x)) return 0.0;
  double y = std::remainder(x, 2.0);  // in [-1, 1]
  if (y > 0.5) y = 1.0 - y;
  if (y < -0.5) y = -1.0 - y;
  return std::sin(std::numbers::pi * y);
}

SignedLog log_rgamma(double x) noexcept {
  if (is_nonpositive_integer(x)) return {-std::numeric_limits<double>::infinity(), 0};
  int sign = 1;
  const double lg = ::lgamma_r(x, &sign);
  return {-lg, sign};
}

double rgamma(double x) noexcept {
  if (is_nonpositive_integer(x)) return 0.0;
  if (std::abs(x) < kDirectGammaLimit) return 1.0 / std::tgamma(x);
  const SignedLog l = log_rgamma(x);
  return l.sign * std::exp(l.log_abs);
}

double gamma_ratio(double a, double b) {
  if (is_nonpositive_integer(b)) return 0.0;
  if (a > 0.0 && b > 0.0) return boost::math::tgamma_ratio(a, b);
  if (std::abs(a) < kDirectGammaLimit && std::abs(b) < kDirectGammaLimit)
    return std::tgamma(a) * rgamma(b);
  const SignedLog la = log_rgamma(a);
  const SignedLog lb = log_rgamma(b);
  return la.sign * lb.sign * std::exp(lb.log_abs - la.log_abs);
}

}  // namespace constq::special
