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

#include "constq/material.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "constq/errors.hpp"

namespace constq::material {

namespace {
constexpr double kPi = std::numbers::pi;
}  // namespace

MaterialLaw::MaterialLaw(double rho_, double D_, double nu_) : rho(rho_), D(D_), nu(nu_) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("MaterialLaw: rho must be > 0");
  if (!(D > 0.0) || !std::isfinite(D)) throw DomainError("MaterialLaw: D must be > 0");
  if (!(nu > 0.0 && nu <= 1.0))
    throw DomainError("MaterialLaw: nu must lie in (0,1], got " + std::to_string(nu));
}

QFactor QFactor::from_q(double Q) {
  if (!(Q > 0.0)) throw DomainError("QFactor: Q must be > 0, got " + std::to_string(Q));
  if (std::isinf(Q)) return QFactor{0.0, false};
  return QFactor{1.0 / Q, false};
}

QFactor QFactor::from_q_inv(double q_inv) {
  if (!(q_inv >= 0.0) || !std::isfinite(q_inv))
    throw DomainError("QFactor: q_inv must be finite and >= 0");
  return QFactor{q_inv, false};
}

QFactor q_from_nu(double nu) {
  if (nu == 1.0) return QFactor::unbounded();
  if (!(nu > 0.0 && nu < 1.0))
    throw DomainError("q_from_nu: nu must lie in (0,1], got " + std::to_string(nu));
  return QFactor{std::tan(0.5 * kPi * nu), false};
}

double nu_from_q(const QFactor& q) {
  if (q.infinite) return 1.0;
  if (!(q.q_inv > 0.0) || !std::isfinite(q.q_inv))
    throw DomainError("nu_from_q: q_inv must be finite and > 0");
  return 2.0 / kPi * std::atan(q.q_inv);
}

NearlyElastic nearly_elastic_approx(const QFactor& q) {
  const double exact = nu_from_q(q);
  if (q.infinite) throw DomainError("nearly_elastic_approx: q_inv must be finite");
  const double approx = 2.0 * q.q_inv / kPi;
  return {approx, std::abs(approx - exact) / exact, 0.5 * kPi * exact};
}

double creep_compliance(double t, const MaterialLaw& mat) {
  if (!(t > 0.0)) throw DomainError("creep_compliance: t must be > 0");
  return std::pow(t, mat.nu) / (mat.rho * mat.D * std::tgamma(mat.nu + 1.0));
}

fractional::PowerFunction stress_from_strain_power(const fractional::PowerFunction& eps,
                                                   const MaterialLaw& mat) {
  fractional::PowerFunction s = fractional::frac_derivative_power(
      eps, fractional::FractionalOrder(mat.nu), fractional::DerivativeKind::caputo);
  s.coefficient *= mat.rho * mat.D;
  return s;
}

double mu_exponent(double s, const MaterialLaw& mat) {
  if (!(s > 0.0)) throw DomainError("mu_exponent: s must be > 0");
  return std::pow(s, mat.beta()) / std::sqrt(mat.D);
}

double mu_exponent_from_compliance(double s, const MaterialLaw& mat) {
  if (!(s > 0.0)) throw DomainError("mu_exponent_from_compliance: s must be > 0");
  const double j_tilde = 1.0 / (mat.rho * mat.D * std::pow(s, mat.nu + 1.0));
  return s * std::sqrt(mat.rho * s * j_tilde);
}

Behavior classify_behavior(double J0, double rho) {
  if (!(J0 >= 0.0)) throw DomainError("classify_behavior: J0 must be >= 0");
  if (!(rho > 0.0)) throw DomainError("classify_behavior: rho must be > 0");
  if (J0 > 0.0) return WaveLike{1.0 / std::sqrt(rho * J0)};
  return DiffusionLike{};
}

}  // namespace constq::material
