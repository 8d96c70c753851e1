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

// Stable probability densities: the Gauss, Lévy and Cauchy laws, the
// convergent power series of the extremal and general stable densities, and
// their link to the Wright-type auxiliary functions.

#include <string_view>

#include "constq/green.hpp"

namespace constq::stable {

struct StableParams {
  double alpha;
  double theta;

  /// Requires α ∈ (0,1) ∪ (1,2], |θ| ≤ α for α < 1 and |θ| ≤ 2 - α for α > 1.
  StableParams(double alpha, double theta);

  bool extremal() const noexcept;
};

struct GaussParams {
  double sigma;

  explicit GaussParams(double sigma);
  /// σ² = 2 D t.
  static GaussParams from_diffusion(double D, double t);
};

struct LevyParams {
  double mu;

  explicit LevyParams(double mu);
  /// μ = x² / (2D).
  static LevyParams from_signalling(double x, double D);
};

double gauss_pdf(double x, const GaussParams& g);
double gauss_cdf(double x, const GaussParams& g);

double levy_pdf(double t, const LevyParams& l);
double levy_cdf(double t, const LevyParams& l);
double levy_median(const LevyParams& l);

/// λ / (π (x² + λ²)).
double cauchy_pdf(double x, double lambda);

enum class Path { series, wright, integral, closed_form };

std::string_view to_string(Path p) noexcept;

struct StableValue {
  double value;
  Path path;
};

/// Power series in y^-α (α < 1) or y (α > 1). When the series stalls for an
/// extremal θ the value is taken from the Wright identity instead; for other
/// θ it is taken from the Fourier inversion integral. α = 2 is the Gaussian
/// with σ² = 2, evaluated through M(y; 1/2). Requires y > 0.
StableValue stable_pdf_eval(double y, const StableParams& p);

double stable_pdf_series(double y, const StableParams& p);

/// Any real y, through p_α(-y;-θ) = p_α(y;θ). At y = 0 only the cases with
/// a finite series limit are accepted.
double stable_pdf(double y, const StableParams& p);

enum class WrightKind {
  unilateral,  ///< 0 < α < 1, θ = -α:  (α / y^(α+1)) M(y^-α; α)
  bilateral,   ///< 1 < α ≤ 2, θ = α-2: (1/α) M(y; 1/α)
};

double stable_from_wright(double y, double alpha, WrightKind kind);

/// y^-(α+1) p_{1/α}(y^-α; θ) - p_α(y; α(θ+1) - 1) for 1/2 < α < 1 and
/// |θ| ≤ 2 - 1/α.
double stable_duality_residual(double y, double alpha, double theta);

/// lhs = (x/√D)^(1/β) G_s(x,t), rhs = p_β(τ; -β) with τ = t (√D/x)^(1/β).
green::Comparison signalling_as_stable(double x, double t, const green::Medium& m);

/// lhs = 2β √D t^β G_c(|x|,t), rhs = p_{1/β}(ξ; 1/β - 2) with
/// ξ = |x| / (√D t^β). Requires 1/2 ≤ β < 1 and x ≠ 0.
green::Comparison cauchy_as_stable(double x, double t, const green::Medium& m);

/// ∫₀^∞ e^{-st} p_α(t; -α) dt by quadrature, for comparison with exp(-s^α).
double laplace_unilateral(double s, double alpha);

/// Distribution function by quadrature of the density.
double stable_cdf(double y, const StableParams& p);

/// Median by root finding on stable_cdf.
double stable_median(const StableParams& p);

}  // namespace constq::stable
