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

// Power-law solid: creep compliance J(t) ∝ t^ν, its fractional
// stress-strain law and the constant-Q maps.

#include <string_view>
#include <variant>

#include "constq/fractional_calculus.hpp"

namespace constq::material {

struct MaterialLaw {
  double rho;
  double D;
  double nu;

  /// Requires ρ > 0, D > 0 and 0 < ν ≤ 1.
  MaterialLaw(double rho, double D, double nu);

  /// β = 1 - ν/2.
  double beta() const noexcept { return 1.0 - 0.5 * nu; }
};

/// Internal friction Q^-1. `infinite` marks the Newtonian limit ν = 1.
struct QFactor {
  double q_inv = 0.0;
  bool infinite = false;

  static QFactor from_q(double Q);
  static QFactor from_q_inv(double q_inv);
  static QFactor unbounded() { return QFactor{0.0, true}; }
};

/// Q^-1 = tan(νπ/2); ν = 1 gives QFactor::unbounded().
QFactor q_from_nu(double nu);

/// ν = (2/π) arctan(Q^-1).
double nu_from_q(const QFactor& q);

struct NearlyElastic {
  double nu_approx;         ///< 2 Q^-1 / π
  double rel_err_vs_exact;  ///< relative to the arctan map
  double q_inv_approx;      ///< (π/2) ν_exact
};

NearlyElastic nearly_elastic_approx(const QFactor& q);

/// J(t) = t^ν / (ρ D Γ(ν+1)).
double creep_compliance(double t, const MaterialLaw& mat);

/// σ = ρ D D_*^ν ε.
fractional::PowerFunction stress_from_strain_power(const fractional::PowerFunction& eps,
                                                   const MaterialLaw& mat);

/// μ(s) = s^β / √D.
double mu_exponent(double s, const MaterialLaw& mat);

/// s √(ρ s J~(s)) with J~(s) = 1/(ρ D s^(ν+1)), which equals mu_exponent.
double mu_exponent_from_compliance(double s, const MaterialLaw& mat);

struct WaveLike {
  double front_velocity;  ///< 1/√(ρ J₀)
};
struct DiffusionLike {};

using Behavior = std::variant<WaveLike, DiffusionLike>;

/// Classification by the glass compliance J₀ = J(0+).
Behavior classify_behavior(double J0, double rho);

}  // namespace constq::material
