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

#include "constq/stable.hpp"

#include <boost/math/tools/roots.hpp>

#include <cfloat>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "constq/errors.hpp"
#include "constq/quadrature.hpp"
#include "constq/special.hpp"
#include "constq/wright.hpp"

namespace constq::stable {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRangeTol = 1e-12;
constexpr double kClamp = 1e-12;
constexpr int kExtremalTerms = 200;
constexpr int kMaxTerms = 10000;
constexpr double kSeriesRatio = 1e6;
constexpr int kMaxPanels = 20000;
constexpr double kExtremalRatio = 1e4;
const double kStop = std::log(1e-17);

bool near(double a, double b) { return std::abs(a - b) <= kRangeTol * std::max(1.0, std::abs(b)); }

// The extremal cases covered by the Wright identities on y > 0.
bool wright_covered(const StableParams& p) {
  if (p.alpha < 1.0) return near(p.theta, -p.alpha);
  return near(p.theta, p.alpha - 2.0);
}

struct SeriesSum {
  double value = 0.0;
  double log_ratio = 0.0;
  bool converged = false;
};

// (1/πy) Σ_{n≥1} (-u)^n Γ(n c + 1)/n! sin(n π d), with u = y^-α, c = α,
// d = (θ-α)/2 when α < 1, and u = y, c = 1/α, d = (θ-α)/(2α) when α > 1.
SeriesSum power_series(double y, const StableParams& p, int max_terms) {
  const bool negative_powers = p.alpha < 1.0;
  const double c = negative_powers ? p.alpha : 1.0 / p.alpha;
  const double d = negative_powers ? 0.5 * (p.theta - p.alpha) : 0.5 * (p.theta - p.alpha) / p.alpha;
  const double lu = negative_powers ? -p.alpha * std::log(y) : std::log(y);

  SeriesSum out;
  if (d == std::floor(d)) {
    // Every sine vanishes: the far side of a unilateral law.
    out.converged = true;
    return out;
  }
  double sum = 0.0;
  double comp = 0.0;
  double log_max = -std::numeric_limits<double>::infinity();
  double prev_env = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= max_terms; ++n) {
    const double env = n * lu + std::lgamma(n * c + 1.0) - std::lgamma(n + 1.0);
    if (env > 700.0) return out;
    const double s = special::sin_pi(n * d);
    if (s != 0.0) {
      const double lt = env + std::log(std::abs(s));
      log_max = std::max(log_max, lt);
      const double term = ((n % 2 == 1) ? -1.0 : 1.0) * (s > 0.0 ? 1.0 : -1.0) * std::exp(lt);
      const double t = sum + term;
      comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
      sum = t;
    }
    const double total = sum + comp;
    const bool small = total != 0.0 ? env < std::log(std::abs(total)) + kStop : env < -745.0;
    if (env < prev_env && small) {
      out.value = total / (kPi * y);
      out.log_ratio = total != 0.0 ? log_max - std::log(std::abs(total)) : 0.0;
      out.converged = true;
      return out;
    }
    prev_env = env;
  }
  return out;
}

// For α > 1 the series in y^-α, convergent when α < 1, is asymptotic as
// y → ∞. It is summed up to its smallest term and accepted only when that
// term is negligible.
SeriesSum asymptotic_series(double y, const StableParams& p) {
  const double d = 0.5 * (p.theta - p.alpha);
  const double lu = -p.alpha * std::log(y);
  SeriesSum out;
  double sum = 0.0;
  double prev_env = std::numeric_limits<double>::infinity();
  double log_max = -std::numeric_limits<double>::infinity();
  for (int n = 1; n <= kExtremalTerms; ++n) {
    const double env = n * lu + std::lgamma(n * p.alpha + 1.0) - std::lgamma(n + 1.0);
    if (env > prev_env) return out;
    const double s = special::sin_pi(n * d);
    if (s != 0.0) {
      const double lt = env + std::log(std::abs(s));
      log_max = std::max(log_max, lt);
      sum += ((n % 2 == 1) ? -1.0 : 1.0) * (s > 0.0 ? 1.0 : -1.0) * std::exp(lt);
    }
    if (sum != 0.0 && env < std::log(std::abs(sum)) + kStop) {
      out.value = sum / (kPi * y);
      out.log_ratio = log_max - std::log(std::abs(sum));
      out.converged = true;
      return out;
    }
    prev_env = env;
  }
  return out;
}

double clamp(double v) { return (v < 0.0 && v > -kClamp) ? 0.0 : v; }

// p(y) = (1/π) ∫₀^∞ exp(-k^α cos φ) cos(k y + k^α sin φ) dk, φ = θπ/2,
// split into half periods of cos(k y).
double fourier_inversion(double y, const StableParams& p) {
  const double phi = 0.5 * kPi * p.theta;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  if (!(c > 0.0)) throw DomainError("stable density: Fourier inversion needs |theta| < 1");
  auto f = [&](double k) {
    if (k <= 0.0) return 1.0;
    const double ka = std::pow(k, p.alpha);
    return std::exp(-ka * c) * std::cos(k * y + ka * s);
  };
  const double upper = std::pow(40.0 / c, 1.0 / p.alpha);
  const double half = kPi / y;
  const double panels = std::ceil(upper / half);
  if (panels > kMaxPanels)
    throw NonConvergenceError("stable density: too many oscillations at y=" + std::to_string(y));
  std::vector<double> bp;
  bp.reserve(static_cast<std::size_t>(panels) + 2);
  bp.push_back(0.0);
  for (double k = half; k < upper; k += half) bp.push_back(k);
  bp.push_back(upper);
  quad::Options o;
  o.rel_tol = 1e-12;
  o.abs_tol = 1e-15;
  // k^α is not smooth at the origin.
  const double head = quad::integrate_singular(f, bp[0], bp[1], o).value;
  return (head + quad::integrate(f, std::span<const double>(bp).subspan(1), o).value) / kPi;
}

double unilateral_wright(double y, double alpha) {
  const double r = std::pow(y, -alpha);
  const double M = wright::m_aux(r, wright::AuxFunctionParams(alpha)).value;
  if (M == 0.0) return 0.0;
  return alpha * std::exp(-(alpha + 1.0) * std::log(y) + std::log(M));
}

double bilateral_wright(double y, double alpha) {
  return wright::m_aux(y, wright::AuxFunctionParams(1.0 / alpha)).value / alpha;
}

}  // namespace

StableParams::StableParams(double a, double t) : alpha(a), theta(t) {
  if (!(a > 0.0 && a <= 2.0) || a == 1.0)
    throw DomainError("StableParams: alpha must lie in (0,1) or (1,2], got " + std::to_string(a));
  const double bound = a < 1.0 ? a : 2.0 - a;
  if (!(std::abs(t) <= bound + kRangeTol))
    throw DomainError("StableParams: |theta| must not exceed " + std::to_string(bound) +
                      ", got " + std::to_string(t));
}

bool StableParams::extremal() const noexcept {
  const double bound = alpha < 1.0 ? alpha : 2.0 - alpha;
  return near(std::abs(theta), bound);
}

GaussParams::GaussParams(double s) : sigma(s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("GaussParams: sigma must be > 0");
}

GaussParams GaussParams::from_diffusion(double D, double t) {
  if (!(D > 0.0) || !(t > 0.0)) throw DomainError("GaussParams: D and t must be > 0");
  return GaussParams(std::sqrt(2.0 * D * t));
}

LevyParams::LevyParams(double m) : mu(m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("LevyParams: mu must be > 0");
}

LevyParams LevyParams::from_signalling(double x, double D) {
  if (!(D > 0.0) || x == 0.0) throw DomainError("LevyParams: need D > 0 and x != 0");
  return LevyParams(x * x / (2.0 * D));
}

double gauss_pdf(double x, const GaussParams& g) {
  const double u = x / g.sigma;
  return std::exp(-0.5 * u * u) / (std::sqrt(2.0 * kPi) * g.sigma);
}

double gauss_cdf(double x, const GaussParams& g) {
  return 0.5 * std::erfc(-x / (std::numbers::sqrt2 * g.sigma));
}

double levy_pdf(double t, const LevyParams& l) {
  if (!(t > 0.0)) throw DomainError("levy_pdf: t must be > 0");
  return std::sqrt(l.mu / (2.0 * kPi)) * std::pow(t, -1.5) * std::exp(-l.mu / (2.0 * t));
}

double levy_cdf(double t, const LevyParams& l) {
  if (!(t > 0.0)) throw DomainError("levy_cdf: t must be > 0");
  return std::erfc(std::sqrt(l.mu / (2.0 * t)));
}

double levy_median(const LevyParams& l) {
  auto f = [&](double t) { return levy_cdf(t, l) - 0.5; };
  std::uintmax_t iters = 200;
  const auto res = boost::math::tools::toms748_solve(
      f, l.mu, 10.0 * l.mu, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (res.first + res.second);
}

double cauchy_pdf(double x, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("cauchy_pdf: lambda must be > 0");
  return lambda / (kPi * (x * x + lambda * lambda));
}

std::string_view to_string(Path p) noexcept {
  switch (p) {
    case Path::series: return "series";
    case Path::wright: return "wright";
    case Path::integral: return "integral";
    case Path::closed_form: return "closed_form";
  }
  return "unknown";
}

StableValue stable_pdf_eval(double y, const StableParams& p) {
  if (!(y > 0.0) || !std::isfinite(y))
    throw DomainError("stable_pdf_series: y must be finite and > 0");
  if (p.alpha == 2.0) return {clamp(bilateral_wright(y, 2.0)), Path::wright};

  const bool covered = wright_covered(p);
  if (covered) {
    const SeriesSum s = power_series(y, p, kExtremalTerms);
    if (s.converged && s.log_ratio <= std::log(kExtremalRatio)) return {clamp(s.value), Path::series};
    const double v = p.alpha < 1.0 ? unilateral_wright(y, p.alpha) : bilateral_wright(y, p.alpha);
    return {clamp(v), Path::wright};
  }

  const SeriesSum s = power_series(y, p, kMaxTerms);
  if (s.converged && s.log_ratio <= std::log(kSeriesRatio)) return {clamp(s.value), Path::series};
  if (p.alpha > 1.0) {
    const SeriesSum a = asymptotic_series(y, p);
    if (a.converged && a.log_ratio <= std::log(kSeriesRatio)) return {clamp(a.value), Path::series};
  }
  return {clamp(fourier_inversion(y, p)), Path::integral};
}

double stable_pdf_series(double y, const StableParams& p) { return stable_pdf_eval(y, p).value; }

double stable_pdf(double y, const StableParams& p) {
  if (y > 0.0) return stable_pdf_series(y, p);
  if (y < 0.0) return stable_pdf_series(-y, StableParams(p.alpha, -p.theta));
  if (p.alpha > 1.0)
    return std::tgamma(1.0 / p.alpha + 1.0) * special::sin_pi(0.5 * (p.alpha - p.theta) / p.alpha) /
           kPi;
  if (p.extremal()) return 0.0;
  throw DomainError("stable_pdf: the density at y=0 needs alpha > 1 or extremal theta");
}

double stable_from_wright(double y, double alpha, WrightKind kind) {
  if (!(y > 0.0)) throw DomainError("stable_from_wright: y must be > 0");
  if (kind == WrightKind::unilateral) {
    if (!(alpha > 0.0 && alpha < 1.0))
      throw DomainError("stable_from_wright: unilateral kind needs 0 < alpha < 1");
    return unilateral_wright(y, alpha);
  }
  if (!(alpha > 1.0 && alpha <= 2.0))
    throw DomainError("stable_from_wright: bilateral kind needs 1 < alpha <= 2");
  return bilateral_wright(y, alpha);
}

double stable_duality_residual(double y, double alpha, double theta) {
  if (!(alpha > 0.5 && alpha < 1.0))
    throw DomainError("stable_duality_residual: alpha must lie in (1/2,1)");
  if (!(std::abs(theta) <= 2.0 - 1.0 / alpha + kRangeTol))
    throw DomainError("stable_duality_residual: |theta| must not exceed 2 - 1/alpha");
  if (!(y > 0.0)) throw DomainError("stable_duality_residual: y must be > 0");
  const double lhs = std::pow(y, -(alpha + 1.0)) *
                     stable_pdf_series(std::pow(y, -alpha), StableParams(1.0 / alpha, theta));
  const double theta_star = alpha * (theta + 1.0) - 1.0;
  return lhs - stable_pdf_series(y, StableParams(alpha, theta_star));
}

green::Comparison signalling_as_stable(double x, double t, const green::Medium& m) {
  if (!(x > 0.0) || !(t > 0.0)) throw DomainError("signalling_as_stable: x and t must be > 0");
  const double sd = std::sqrt(m.D);
  const double inv_b = 1.0 / m.beta;
  const double lhs = std::pow(x / sd, inv_b) * green::green_signalling({x, t}, m);
  const double tau = t * std::pow(sd / x, inv_b);
  return {lhs, stable_pdf_series(tau, StableParams(m.beta, -m.beta))};
}

green::Comparison cauchy_as_stable(double x, double t, const green::Medium& m) {
  if (!(m.beta >= 0.5)) throw DomainError("cauchy_as_stable: needs 1/2 <= beta < 1");
  if (x == 0.0) throw DomainError("cauchy_as_stable: x must be nonzero");
  if (!(t > 0.0)) throw DomainError("cauchy_as_stable: t must be > 0");
  const double sd = std::sqrt(m.D);
  const double tb = std::pow(t, m.beta);
  const double lhs = 2.0 * m.beta * sd * tb * green::green_cauchy({std::abs(x), t}, m);
  const double xi = std::abs(x) / (sd * tb);
  const double a = 1.0 / m.beta;
  return {lhs, stable_pdf_series(xi, StableParams(a, a - 2.0))};
}

double laplace_unilateral(double s, double alpha) {
  if (!(s > 0.0)) throw DomainError("laplace_unilateral: s must be > 0");
  const StableParams p(alpha, -alpha);
  quad::Options o;
  o.rel_tol = 1e-11;
  return quad::integrate_to_infinity(
             [&](double t) { return t > 0.0 ? std::exp(-s * t) * stable_pdf_series(t, p) : 0.0; },
             0.0, 1.0, o)
      .value;
}

namespace {

// ∫₀^∞ p(v;θ) dv split at v = 1.
double positive_mass(const StableParams& p) {
  quad::Options o;
  o.rel_tol = 1e-10;
  auto f = [&](double v) { return v > 0.0 ? stable_pdf_series(v, p) : stable_pdf(0.0, p); };
  return quad::integrate_singular(f, 0.0, 1.0, o).value +
         quad::integrate_algebraic_tail(f, 1.0, o).value;
}

}  // namespace

double stable_cdf(double y, const StableParams& p) {
  quad::Options o;
  o.rel_tol = 1e-10;
  o.abs_tol = 1e-14;
  if (y <= 0.0) {
    const StableParams q(p.alpha, -p.theta);
    auto f = [&](double v) { return stable_pdf_series(v, q); };
    if (y == 0.0) return positive_mass(q);
    return quad::integrate_algebraic_tail(f, -y, o).value;
  }
  auto f = [&](double v) { return v > 0.0 ? stable_pdf_series(v, p) : stable_pdf(0.0, p); };
  return positive_mass(StableParams(p.alpha, -p.theta)) +
         quad::integrate_singular(f, 0.0, y, o).value;
}

double stable_median(const StableParams& p) {
  auto f = [&](double y) { return stable_cdf(y, p) - 0.5; };
  double lo = -1.0;
  double hi = 1.0;
  if (p.alpha < 1.0 && near(p.theta, -p.alpha)) lo = 1e-6;
  if (p.alpha < 1.0 && near(p.theta, p.alpha)) hi = -1e-6;
  for (int i = 0; i < 60 && f(lo) > 0.0; ++i) lo = lo < 0.0 ? 2.0 * lo : 0.5 * lo;
  for (int i = 0; i < 60 && f(hi) < 0.0; ++i) hi = hi > 0.0 ? 2.0 * hi : 0.5 * hi;
  std::uintmax_t iters = 100;
  const auto res = boost::math::tools::toms748_solve(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(40), iters);
  return 0.5 * (res.first + res.second);
}

}  // namespace constq::stable
