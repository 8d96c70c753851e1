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

#include "constq/green.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "constq/errors.hpp"

namespace constq::green {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxBeta = 1.0 - 1e-4;
constexpr double kLatticeTol = 1e-9;

void check_time(double t, const char* who) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw DomainError(std::string(who) + ": t must be > 0, got " + std::to_string(t));
}

void check_position(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw DomainError(std::string(who) + ": x must be > 0, got " + std::to_string(x));
}

double trapezoid_weight(std::size_t j, std::size_t last) {
  return (j == 0 || j == last) ? 0.5 : 1.0;
}

}  // namespace

Medium::Medium(double D_, double beta_) : D(D_), beta(beta_) {
  if (!(D > 0.0) || !std::isfinite(D)) throw DomainError("Medium: D must be > 0");
  if (!(beta > 0.0 && beta <= kMaxBeta))
    throw DomainError("Medium: beta must lie in (0, 1-1e-4], got " + std::to_string(beta));
}

double similarity_variable(const SpaceTimePoint& p, const Medium& m) {
  return std::abs(p.x) / (std::sqrt(m.D) * std::pow(p.t, m.beta));
}

double green_cauchy(const SpaceTimePoint& p, const Medium& m, wright::Method method) {
  check_time(p.t, "green_cauchy");
  const double r = similarity_variable(p, m);
  const double M = wright::m_aux(r, wright::AuxFunctionParams(m.beta, method)).value;
  return M / (2.0 * std::sqrt(m.D) * std::pow(p.t, m.beta));
}

double green_signalling(const SpaceTimePoint& p, const Medium& m, wright::Method method) {
  check_position(p.x, "green_signalling");
  check_time(p.t, "green_signalling");
  const double r = similarity_variable(p, m);
  return wright::f_aux(r, wright::AuxFunctionParams(m.beta, method)).value / p.t;
}

double reciprocity_residual(const SpaceTimePoint& p, const Medium& m) {
  check_position(p.x, "reciprocity_residual");
  check_time(p.t, "reciprocity_residual");
  const double r = similarity_variable(p, m);
  const double gc = wright::m_series(r, m.beta).value / (2.0 * std::sqrt(m.D) * std::pow(p.t, m.beta));
  const double gs = wright::f_series(r, m.beta).value / p.t;
  return 2.0 * m.beta * p.x * gc - p.t * gs;
}

ScalingCheck scaling_check(const SpaceTimePoint& p, const Medium& m, double scale_p,
                           double scale_q) {
  if (!(scale_p > 0.0) || !(scale_q > 0.0))
    throw DomainError("scaling_check: scales must be > 0");
  check_time(p.t, "scaling_check");
  const double qb = std::pow(scale_q, m.beta);
  const SpaceTimePoint scaled{scale_p * p.x, scale_q * p.t};
  const SpaceTimePoint moved{scale_p * p.x / qb, p.t};

  ScalingCheck out{};
  out.cauchy = {green_cauchy(scaled, m), green_cauchy(moved, m) / qb};
  if (p.x > 0.0) {
    out.signalling = {green_signalling(scaled, m), green_signalling(moved, m) / scale_q};
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.signalling = {nan, nan};
  }
  return out;
}

double green_laplace(double x, double s, const Medium& m, Problem kind) {
  if (!(s > 0.0)) throw DomainError("green_laplace: s must be > 0");
  const double sd = std::sqrt(m.D);
  const double sb = std::pow(s, m.beta);
  if (kind == Problem::cauchy)
    return std::exp(-std::abs(x) / sd * sb) / (2.0 * sd * std::pow(s, 1.0 - m.beta));
  if (!(x >= 0.0)) throw DomainError("green_laplace: signalling needs x >= 0");
  return std::exp(-x / sd * sb);
}

ClassicalLimit classical_limits(const SpaceTimePoint& p, double D, double beta) {
  if (!(D > 0.0)) throw DomainError("classical_limits: D must be > 0");
  if (beta == 1.0) {
    const double c = std::sqrt(D);
    return WaveLimit{c, 0.5, c * p.t, std::abs(p.x) / c};
  }
  if (beta != 0.5) throw DomainError("classical_limits: beta must be 1/2 or 1");
  check_time(p.t, "classical_limits");
  const double g = std::exp(-p.x * p.x / (4.0 * D * p.t));
  const double gc = g / (2.0 * std::sqrt(kPi * D * p.t));
  const double gs = p.x > 0.0 ? p.x * g / (2.0 * std::sqrt(kPi * D) * std::pow(p.t, 1.5))
                              : std::numeric_limits<double>::quiet_NaN();
  return DiffusionLimit{gc, gs};
}

SpatialSamples discrete_delta(double x0, double dx, std::size_t n, double at) {
  if (!(dx > 0.0)) throw GridError("discrete_delta: dx must be > 0");
  if (n < 2) throw GridError("discrete_delta: at least 2 samples are required");
  const double k = std::round((at - x0) / dx);
  if (k < 0.0 || k > static_cast<double>(n - 1))
    throw GridError("discrete_delta: spike position outside the grid");
  SpatialSamples g{x0, dx, std::vector<double>(n, 0.0)};
  const auto j = static_cast<std::size_t>(k);
  g.values[j] = 1.0 / (trapezoid_weight(j, n - 1) * dx);
  return g;
}

fractional::SampledFunction discrete_time_delta(double dt, std::size_t n) {
  if (!(dt > 0.0)) throw GridError("discrete_time_delta: dt must be > 0");
  if (n < 2) throw GridError("discrete_time_delta: at least 2 samples are required");
  std::vector<double> v(n, 0.0);
  v[0] = 2.0 / dt;
  return fractional::SampledFunction(dt, std::move(v));
}

PulseProfile convolve_cauchy(const SpatialSamples& g, double t, const Medium& m,
                             std::span<const double> x_out) {
  check_time(t, "convolve_cauchy");
  const std::size_t n = g.values.size();
  if (!(g.dx > 0.0)) throw GridError("convolve_cauchy: dx must be > 0");
  if (n < 2) throw GridError("convolve_cauchy: at least 2 samples are required");

  // Output nodes as signed lattice indices relative to x0.
  std::vector<long> nodes;
  if (x_out.empty()) {
    for (std::size_t k = 0; k < n; ++k) nodes.push_back(static_cast<long>(k));
  } else {
    for (double x : x_out) {
      const double u = (x - g.x0) / g.dx;
      const double k = std::round(u);
      if (std::abs(u - k) > kLatticeTol)
        throw GridError("convolve_cauchy: output position " + std::to_string(x) +
                        " is not on the data lattice");
      nodes.push_back(static_cast<long>(k));
    }
  }

  long max_lag = 0;
  for (long k : nodes)
    max_lag = std::max({max_lag, std::abs(k), std::abs(k - static_cast<long>(n - 1))});
  std::vector<double> kernel(static_cast<std::size_t>(max_lag) + 1);
  for (long d = 0; d <= max_lag; ++d)
    kernel[static_cast<std::size_t>(d)] = green_cauchy({static_cast<double>(d) * g.dx, t}, m);

  PulseProfile out{Axis::space_at_fixed_t, t, {}};
  out.samples.reserve(nodes.size());
  for (long k : nodes) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (g.values[j] == 0.0) continue;
      const auto lag = static_cast<std::size_t>(std::abs(k - static_cast<long>(j)));
      acc += trapezoid_weight(j, n - 1) * g.values[j] * kernel[lag];
    }
    out.samples.emplace_back(g.x0 + static_cast<double>(k) * g.dx, acc * g.dx);
  }
  return out;
}

PulseProfile convolve_signalling(const fractional::SampledFunction& h, double x, const Medium& m) {
  check_position(x, "convolve_signalling");
  const std::size_t n = h.values.size();
  if (!(h.dt > 0.0)) throw GridError("convolve_signalling: dt must be > 0");
  if (n < 2) throw GridError("convolve_signalling: at least 2 samples are required");

  std::vector<double> kernel(n, 0.0);
  for (std::size_t d = 1; d < n; ++d) kernel[d] = green_signalling({x, h.time(d)}, m);

  PulseProfile out{Axis::time_at_fixed_x, x, {}};
  out.samples.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j < k; ++j)
      acc += trapezoid_weight(j, k) * h.values[j] * kernel[k - j];
    out.samples.emplace_back(h.time(k), acc * h.dt);
  }
  return out;
}

DecayExponents decay_exponents(const Medium& m) {
  const double q = 1.0 - m.beta;
  return {1.0 / q, (m.beta - 0.5) / q, -(1.0 + m.beta)};
}

}  // namespace constq::green
