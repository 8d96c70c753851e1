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

#include "constq/wright.hpp"

#include <boost/math/tools/minima.hpp>

#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "constq/errors.hpp"
#include "constq/special.hpp"
#include "wright_series.hpp"

namespace constq::wright {

namespace {

constexpr double kClamp = 1e-12;
constexpr double kMatchTol = 1e-6;
constexpr double kSeriesGuard = 1e13;
// Term budget of the series inside the automatic policy. Beyond it the
// contour is both faster and as accurate.
constexpr int kAutoSeriesTerms = 1000;
constexpr double kAutoSeriesLimit = 2.0;
constexpr double kMatchStep = 0.25;
constexpr double kMatchMaxR = 200.0;

void check_beta(double beta, const char* who) {
  if (!(beta > 0.0 && beta < 1.0))
    throw DomainError(std::string(who) + ": beta must lie in (0,1), got " + std::to_string(beta));
}

void check_r(double r, const char* who) {
  if (!(r >= 0.0) || !std::isfinite(r))
    throw DomainError(std::string(who) + ": r must be finite and >= 0, got " + std::to_string(r));
}

SeriesOptions guarded() {
  SeriesOptions o;
  o.abort_ratio = kSeriesGuard;
  o.max_terms = kAutoSeriesTerms;
  return o;
}

EvalResult clamp(EvalResult e) {
  if (e.value < 0.0 && e.value > -kClamp) e.value = 0.0;
  return e;
}

EvalResult series_or_contour(double r, double beta) {
  try {
    return m_series(r, beta, guarded());
  } catch (const NonConvergenceError&) {
    return m_contour(r, beta);
  }
}

}  // namespace

WrightParams::WrightParams(double l, double m) : lambda(l), mu(m) {
  if (!(l > -1.0) || !std::isfinite(l))
    throw DomainError("WrightParams: lambda must be > -1, got " + std::to_string(l));
  if (!(m > 0.0) || !std::isfinite(m))
    throw DomainError("WrightParams: mu must be > 0, got " + std::to_string(m));
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::series: return "series";
    case Method::saddle_point: return "saddle";
    case Method::contour: return "contour";
    case Method::automatic: return "auto";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  if (name == "series") return Method::series;
  if (name == "saddle" || name == "saddle_point") return Method::saddle_point;
  if (name == "contour") return Method::contour;
  if (name == "auto" || name == "automatic") return Method::automatic;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

AuxFunctionParams::AuxFunctionParams(double b, Method m) : beta(b), method(m) {
  check_beta(b, "AuxFunctionParams");
}

EvalResult m_series(double r, double beta, const SeriesOptions& opts) {
  check_beta(beta, "m_series");
  check_r(r, "m_series");
  return detail::sum_series(-beta, 1.0 - beta, -r, opts);
}

EvalResult f_series(double r, double beta, const SeriesOptions& opts) {
  check_beta(beta, "f_series");
  check_r(r, "f_series");
  return detail::sum_series(-beta, 0.0, -r, opts);
}

double saddle_min_r(double beta) {
  check_beta(beta, "saddle_min_r");
  return std::pow(beta / (1.0 - beta), 1.0 - beta) / beta;
}

EvalResult m_saddle(double r, double beta) {
  check_beta(beta, "m_saddle");
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("m_saddle: r must be > 0");
  const double r_min = saddle_min_r(beta);
  if (r < r_min)
    throw RegimeError("m_saddle: r=" + std::to_string(r) + " below asymptotic threshold " +
                      std::to_string(r_min) + " for beta=" + std::to_string(beta));
  const double q = 1.0 - beta;
  const double lx = std::log(beta * r);
  const double log_a = (beta - 0.5) / q * lx - 0.5 * std::log(2.0 * std::numbers::pi * q);
  const double big_b = q / beta * std::exp(lx / q);
  const double value = std::exp(log_a - big_b);
  // Observed relative error of the leading term is about 0.15/B at worst.
  const double rel = beta == 0.5 ? 4.0 * DBL_EPSILON : 0.15 / big_b;
  return {value, Method::saddle_point, rel * value};
}

std::optional<double> matching_radius(double beta) {
  check_beta(beta, "matching_radius");
  static std::mutex mu;
  static std::map<double, std::optional<double>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(beta); it != cache.end()) return it->second;
  }

  std::optional<double> found;
  const double r_min = saddle_min_r(beta);
  for (int k = 0;; ++k) {
    const double r = kAutoSeriesLimit + k * kMatchStep;
    if (r > kMatchMaxR) break;
    if (r < r_min) continue;
    double s = 0.0;
    try {
      s = m_series(r, beta, guarded()).value;
    } catch (const NonConvergenceError&) {
      break;
    }
    const double a = m_saddle(r, beta).value;
    if (s > 0.0 && std::abs(a - s) <= kMatchTol * s) {
      found = r;
      break;
    }
  }

  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(beta, found);
  return found;
}

EvalResult m_aux(double r, const AuxFunctionParams& p) {
  check_r(r, "m_aux");
  switch (p.method) {
    case Method::series: return clamp(m_series(r, p.beta));
    case Method::saddle_point: return clamp(m_saddle(r, p.beta));
    case Method::contour: return clamp(m_contour(r, p.beta));
    case Method::automatic: break;
  }
  if (r <= kAutoSeriesLimit) return clamp(series_or_contour(r, p.beta));
  const std::optional<double> r_star = matching_radius(p.beta);
  if (!r_star) return clamp(m_contour(r, p.beta));
  if (r <= *r_star) return clamp(series_or_contour(r, p.beta));
  return clamp(m_saddle(r, p.beta));
}

EvalResult f_aux(double r, const AuxFunctionParams& p) {
  check_r(r, "f_aux");
  if (p.method == Method::series) return clamp(f_series(r, p.beta));
  EvalResult m = m_aux(r, p);
  const double k = p.beta * r;
  return {k * m.value, m.method_used, k * m.est_abs_error};
}

double m_moment(int n, double beta) {
  check_beta(beta, "m_moment");
  if (n < 0) throw DomainError("m_moment: order must be >= 0");
  return special::gamma_ratio(n + 1.0, beta * n + 1.0);
}

Peak m_peak(double beta) {
  if (!(beta > 0.5 && beta < 1.0))
    throw DomainError("m_peak: beta must lie in (1/2,1), got " + std::to_string(beta));
  const AuxFunctionParams p(beta);
  auto m = [&](double r) { return m_aux(r, p).value; };

  // M is unimodal, so the largest sample of a uniform scan sits next to the
  // true maximum and its two neighbours bracket it.
  constexpr double kLo = 0.0;
  constexpr double kHi = 4.0;
  constexpr int kCoarse = 400;
  const double h = (kHi - kLo) / kCoarse;
  std::vector<double> v(kCoarse + 1);
  int best = 0;
  for (int i = 0; i <= kCoarse; ++i) {
    v[i] = m(kLo + i * h);
    if (v[i] > v[best]) best = i;
  }
  if (best == 0 || best == kCoarse)
    throw BracketError("m_peak: no interior maximum of M on (0,4) for beta=" +
                       std::to_string(beta));

  double lo = kLo + (best - 1) * h;
  double hi = kLo + (best + 1) * h;
  const double fine = std::min(0.01, (1.0 - beta) / 4.0);
  if (fine < h) {
    // Narrow peaks: rescan the bracket at the finer step first.
    const int n = static_cast<int>(std::ceil((hi - lo) / fine));
    const double step = (hi - lo) / n;
    int fb = 0;
    double fv = -1.0;
    for (int i = 0; i <= n; ++i) {
      const double val = m(lo + i * step);
      if (val > fv) {
        fv = val;
        fb = i;
      }
    }
    const double c = lo + fb * step;
    lo = std::max(lo, c - step);
    hi = std::min(hi, c + step);
  }

  const auto res = boost::math::tools::brent_find_minima([&](double r) { return -m(r); }, lo, hi,
                                                         std::numeric_limits<double>::digits / 2);
  return {res.first, -res.second};
}

}  // namespace constq::wright
