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

#include "wright_series.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "constq/errors.hpp"
#include "constq/special.hpp"

namespace constq::wright {

namespace detail {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLogPi = std::log(std::numbers::pi);
const double kLn10 = std::log(10.0);
const double kStopDouble = std::log(1e-17);
const double kStopExtended = std::log(1e-20);
constexpr double kOverflowLog = 700.0;
constexpr int kGuardDigits = 20;
constexpr int kMaxDigits = 1000;

// log of an upper bound for |1/Γ(x)|: 1/Γ(x) itself for x ≥ 1, and the
// reflection bound Γ(1-x)/π below, which ignores the zeros of sin(πx) so
// that pole terms never end the summation early.
double log_rgamma_envelope(double x) {
  if (x >= 1.0) return -std::lgamma(x);
  return std::lgamma(1.0 - x) - kLogPi;
}

double log_envelope(double lambda, double mu, double log_abs_z, int n) {
  const double base = n == 0 ? 0.0 : n * log_abs_z - std::lgamma(n + 1.0);
  return base + log_rgamma_envelope(lambda * n + mu);
}

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

double log_abs(mpfr_srcptr v) {
  if (mpfr_zero_p(v)) return kNegInf;
  long e = 0;
  const double d = mpfr_get_d_2exp(&e, v, MPFR_RNDN);
  return std::log(std::abs(d)) + static_cast<double>(e) * std::numbers::ln2;
}

struct Pass {
  double value = 0.0;
  double log_abs_sum = kNegInf;
  double log_max_term = kNegInf;
  double next_log_env = kNegInf;
  double abs_sum = 0.0;
  bool overflow = false;
  int terms = 0;
};

std::string describe(double lambda, double mu, double z) {
  return "(lambda=" + std::to_string(lambda) + ", mu=" + std::to_string(mu) +
         ", z=" + std::to_string(z) + ")";
}

Pass double_pass(double lambda, double mu, double z, const SeriesOptions& opts) {
  Pass out;
  const double lz = std::log(std::abs(z));
  const int zsign = z < 0.0 ? -1 : 1;
  double sum = 0.0;
  double comp = 0.0;  // Neumaier compensation
  double prev_env = std::numeric_limits<double>::infinity();
  for (int n = 0; n < opts.max_terms; ++n) {
    const double x = lambda * n + mu;
    const double base = n == 0 ? 0.0 : n * lz - std::lgamma(n + 1.0);
    const special::SignedLog lr = special::log_rgamma(x);
    if (lr.sign != 0) {
      const double lt = base + lr.log_abs;
      out.log_max_term = std::max(out.log_max_term, lt);
      if (lt > kOverflowLog) {
        out.overflow = true;
        return out;
      }
      const int sgn = lr.sign * ((n % 2 == 1) ? zsign : 1);
      const double term = sgn * std::exp(lt);
      const double t = sum + term;
      comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
      sum = t;
      out.abs_sum += std::abs(term);
    }
    const double env = base + log_rgamma_envelope(x);
    const double total = sum + comp;
    const bool falling = env < prev_env;
    const bool small = total != 0.0 ? env < std::log(std::abs(total)) + kStopDouble : env < -745.0;
    if (n > 0 && falling && small) {
      out.value = total;
      out.log_abs_sum = total != 0.0 ? std::log(std::abs(total)) : kNegInf;
      out.next_log_env = log_envelope(lambda, mu, lz, n + 1);
      out.terms = n + 1;
      return out;
    }
    prev_env = env;
  }
  throw NonConvergenceError("wright series: no convergence within " +
                            std::to_string(opts.max_terms) + " terms " +
                            describe(lambda, mu, z));
}

Pass mpfr_pass(double lambda, double mu, double z, int digits, const SeriesOptions& opts) {
  const auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626) + 16);
  Mpfr sum(bits), power(bits), term(bits), x(bits), g(bits), zz(bits);
  mpfr_set_zero(sum.get(), 1);
  mpfr_set_ui(power.get(), 1, MPFR_RNDN);
  mpfr_set_d(zz.get(), z, MPFR_RNDN);
  const double lz = std::log(std::abs(z));
  const double stop = std::max(kStopExtended, -digits * kLn10 + 3.0);

  Pass out;
  double prev_env = std::numeric_limits<double>::infinity();
  for (int n = 0; n < opts.max_terms; ++n) {
    if (n > 0) {
      mpfr_mul(power.get(), power.get(), zz.get(), MPFR_RNDN);
      mpfr_div_ui(power.get(), power.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    }
    mpfr_set_d(x.get(), lambda, MPFR_RNDN);
    mpfr_mul_ui(x.get(), x.get(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_add_d(x.get(), x.get(), mu, MPFR_RNDN);
    const bool pole = mpfr_integer_p(x.get()) && mpfr_sgn(x.get()) <= 0;
    if (!pole) {
      mpfr_gamma(g.get(), x.get(), MPFR_RNDN);
      mpfr_div(term.get(), power.get(), g.get(), MPFR_RNDN);
      mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
      out.log_max_term = std::max(out.log_max_term, log_abs(term.get()));
    }
    const double env = log_envelope(lambda, mu, lz, n);
    const double ls = log_abs(sum.get());
    if (n > 0 && env < prev_env && (env < ls + stop || env < -745.0 - digits * kLn10)) {
      out.value = mpfr_get_d(sum.get(), MPFR_RNDN);
      out.log_abs_sum = ls;
      out.next_log_env = log_envelope(lambda, mu, lz, n + 1);
      out.terms = n + 1;
      return out;
    }
    prev_env = env;
  }
  throw NonConvergenceError("wright series: no convergence within " +
                            std::to_string(opts.max_terms) + " terms at " +
                            std::to_string(digits) + " digits " + describe(lambda, mu, z));
}

int digits_for(double log_ratio) {
  return static_cast<int>(std::ceil(std::max(0.0, log_ratio) / kLn10)) + kGuardDigits;
}

}  // namespace

EvalResult sum_series(double lambda, double mu, double z, const SeriesOptions& opts) {
  if (!std::isfinite(z)) throw DomainError("wright series: argument must be finite");
  if (z == 0.0) return {special::rgamma(mu), Method::series, 0.0};

  const Pass d = double_pass(lambda, mu, z, opts);
  const double log_ratio = d.overflow ? std::numeric_limits<double>::infinity()
                                      : d.log_max_term - d.log_abs_sum;
  const double log_abort = std::log(opts.abort_ratio);
  const double log_escalate = std::log(opts.escalate_ratio);

  // The double sum is only trusted to about 1e-16 of the largest term, so
  // its ratio is a lower bound on the true one; a clear miss aborts at once.
  if (log_ratio > log_abort + 3.0 * kLn10 || (d.overflow && std::isfinite(log_abort)))
    throw NonConvergenceError("wright series: cancellation ratio above guard " +
                              describe(lambda, mu, z));

  if (log_ratio <= log_escalate || !opts.extended_precision) {
    if (log_ratio > log_abort)
      throw NonConvergenceError("wright series: cancellation ratio above guard " +
                                describe(lambda, mu, z));
    const double err = std::exp(d.next_log_env) + 2.0 * DBL_EPSILON * d.abs_sum;
    return {d.value, Method::series, err};
  }

  int digits = digits_for(d.overflow ? d.log_max_term + 40.0 * kLn10 : log_ratio);
  for (;;) {
    if (digits > kMaxDigits)
      throw NonConvergenceError("wright series: more than " + std::to_string(kMaxDigits) +
                                " digits required " + describe(lambda, mu, z));
    const Pass m = mpfr_pass(lambda, mu, z, digits, opts);
    if (m.log_abs_sum == kNegInf) return {0.0, Method::series, std::exp(m.next_log_env)};
    const double true_ratio = m.log_max_term - m.log_abs_sum;
    if (true_ratio > log_abort)
      throw NonConvergenceError("wright series: cancellation ratio above guard " +
                                describe(lambda, mu, z));
    const int needed = digits_for(true_ratio);
    if (needed <= digits) {
      const double err = std::exp(m.next_log_env) + std::abs(m.value) * DBL_EPSILON;
      return {m.value, Method::series, err};
    }
    digits = needed + 10;
  }
}

}  // namespace detail

EvalResult wright_series(const WrightParams& p, double z, const SeriesOptions& opts) {
  return detail::sum_series(p.lambda, p.mu, z, opts);
}

}  // namespace constq::wright
