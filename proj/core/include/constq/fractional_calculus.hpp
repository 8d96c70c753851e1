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

// Riemann-Liouville fractional integral, Riemann-Liouville and Caputo
// fractional derivatives, acting analytically on monomials c·t^γ and
// numerically on uniformly sampled causal functions.

#include <span>
#include <utility>
#include <vector>

namespace constq::fractional {

/// Operator order α ≥ 0 with its integer ceiling m (m - 1 < α ≤ m).
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha);

  double alpha() const noexcept { return alpha_; }
  int m() const noexcept { return m_; }
  bool is_integer() const noexcept { return static_cast<double>(m_) == alpha_; }

 private:
  double alpha_;
  int m_;
};

/// c·t^γ with γ > -1. A zero coefficient is the zero function.
struct PowerFunction {
  double coefficient = 1.0;
  double exponent = 0.0;

  PowerFunction() = default;
  PowerFunction(double c, double gamma);

  double operator()(double t) const;
  bool is_zero() const noexcept { return coefficient == 0.0; }
};

/// Causal function sampled at t_k = k·dt, k = 0..N-1, optionally carrying its
/// derivatives f^(k)(0+) for k = 0..m-1.
struct SampledFunction {
  double dt = 0.0;
  std::vector<double> values;
  std::vector<double> initial_derivatives;

  SampledFunction() = default;
  SampledFunction(double step, std::vector<double> samples,
                  std::vector<double> initial = {});

  std::size_t size() const noexcept { return values.size(); }
  double time(std::size_t k) const noexcept { return static_cast<double>(k) * dt; }
};

enum class DerivativeKind { riemann_liouville, caputo };

/// J^α (c t^γ) = c Γ(γ+1)/Γ(γ+1+α) t^(γ+α). J^0 is the identity.
PowerFunction frac_integral_power(const PowerFunction& p, FractionalOrder order);

/// D^α or D_*^α applied to c t^γ.
///
/// The Riemann-Liouville result is c Γ(γ+1)/Γ(γ+1-α) t^(γ-α), with an exact
/// zero whenever γ+1-α is a pole of Γ. The Caputo result agrees with it
/// except that monomials of integer degree below α are annihilated; for a
/// non-integer γ < m-1 the Caputo derivative does not exist (the m-th
/// derivative is not integrable at 0) and DomainError is thrown.
PowerFunction frac_derivative_power(const PowerFunction& p, FractionalOrder order,
                                    DerivativeKind kind);

/// Caputo derivative of order 0 < α < 1 on the sampling grid of f. The
/// sampled function is replaced by its piecewise-linear interpolant whose
/// derivative is integrated exactly against (t-τ)^(-α) (the L1 product
/// rule). Exact for linear f; O(dt^(2-α)) for smooth f.
SampledFunction caputo_derivative_sampled(const SampledFunction& f, FractionalOrder order);

/// D^α f(t) - D_*^α f(t) = Σ_{k<m} t^(k-α)/Γ(k-α+1) f^(k)(0+).
/// Requires exactly m initial values and a non-integer α.
double rl_from_caputo_correction(std::span<const double> initial_values,
                                 FractionalOrder order, double t);

struct LaplaceCheck {
  double lhs;  ///< numerically transformed Caputo derivative
  double rhs;  ///< s^α f~(s) - f(0+) s^(α-1)
};

/// Laplace rule for the Caputo derivative of a monomial, 0 < α < 1, s > 0.
LaplaceCheck laplace_of_caputo_check(const PowerFunction& f, FractionalOrder order, double s);

}  // namespace constq::fractional
