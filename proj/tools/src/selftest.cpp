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


#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "constq/cli/cli.hpp"
#include "constq/constq.hpp"

namespace constq::cli {

namespace {

constexpr double kPi = std::numbers::pi;

class Suite {
 public:
  Suite(std::vector<CheckResult>& out, std::string name) : out_(out), name_(std::move(name)) {}

  // `residual` returns the measured deviation; exceptions count as failures.
  void check(const std::string& name, double tol, const std::function<double()>& residual) {
    CheckResult r{name_, name, false, 0.0, tol, {}};
    try {
      r.residual = residual();
      r.passed = r.residual <= tol;
    } catch (const std::exception& e) {
      r.residual = std::nan("");
      r.note = e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
  std::string name_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

void fractional_suite(std::vector<CheckResult>& out) {
  using namespace fractional;
  Suite s(out, "fractional-calculus");
  s.check("semigroup", 1e-14, [] {
    double worst = 0.0;
    for (double g : {0.0, 0.5, 2.0})
      for (double a : {0.25, 0.5, 1.3})
        for (double b : {0.25, 0.5, 1.3}) {
          const PowerFunction p(1.0, g);
          const PowerFunction two = frac_integral_power(frac_integral_power(p, FractionalOrder(a)),
                                                        FractionalOrder(b));
          const PowerFunction one = frac_integral_power(p, FractionalOrder(a + b));
          worst = std::max({worst, rel(two.coefficient, one.coefficient),
                            std::abs(two.exponent - one.exponent)});
        }
    return worst;
  });
  s.check("left-inverse", 1e-12, [] {
    double worst = 0.0;
    for (double g : {0.0, 0.5, 2.0})
      for (double a : {0.25, 0.5, 1.3}) {
        const PowerFunction p(1.0, g);
        const PowerFunction back = frac_derivative_power(frac_integral_power(p, FractionalOrder(a)),
                                                         FractionalOrder(a),
                                                         DerivativeKind::riemann_liouville);
        worst = std::max(worst, rel(back.coefficient, p.coefficient));
      }
    return worst;
  });
  s.check("caputo-constant-sampled", 1e-12, [] {
    const SampledFunction f(1e-3, std::vector<double>(1001, 1.0));
    const SampledFunction d = caputo_derivative_sampled(f, FractionalOrder(0.5));
    double worst = 0.0;
    for (double v : d.values) worst = std::max(worst, std::abs(v));
    return worst;
  });
  s.check("caputo-sampled-t", 1e-4, [] {
    std::vector<double> v(1001);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = 1e-3 * static_cast<double>(k);
    const SampledFunction d = caputo_derivative_sampled(SampledFunction(1e-3, v), FractionalOrder(0.5));
    double worst = 0.0;
    for (std::size_t k = 1; k < v.size(); ++k)
      worst = std::max(worst, std::abs(d.values[k] - 2.0 * std::sqrt(d.time(k) / kPi)));
    return worst;
  });
  s.check("laplace-rule", 1e-6, [] {
    const LaplaceCheck c = laplace_of_caputo_check(PowerFunction(1.0, 1.0), FractionalOrder(0.5), 1.0);
    return std::abs(c.lhs - c.rhs);
  });
}

void wright_suite(std::vector<CheckResult>& out) {
  using namespace wright;
  Suite s(out, "wright-core");
  s.check("half-order-oracle", 1e-12, [] {
    double worst = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double r = 0.01 * i;
      worst = std::max(worst, std::abs(m_series(r, 0.5).value -
                                       std::exp(-0.25 * r * r) / std::sqrt(kPi)));
    }
    return worst;
  });
  s.check("f-identity", 1e-12, [] {
    double worst = 0.0;
    for (double b : {0.25, 0.5, 0.75})
      for (double r : {0.5, 1.0, 2.0})
        worst = std::max(worst, rel(f_series(r, b).value, b * r * m_series(r, b).value));
    return worst;
  });
  s.check("series-vs-contour", 1e-8, [] {
    double worst = 0.0;
    for (double b : {0.25, 0.5, 0.75})
      for (double r : {0.0, 1.0, 2.0, 4.0})
        worst = std::max(worst, std::abs(m_series(r, b).value - m_contour(r, b).value));
    return worst;
  });
  s.check("mass", 1e-10, [] {
    const AuxFunctionParams p(0.75);
    const auto f = [&](double r) { return m_aux(r, p).value; };
    return std::abs(quad::integrate_to_infinity(f, 0.0, 1.0).value - 1.0);
  });
  s.check("nearly-elastic-peak", 0.1, [] { return std::abs(m_peak(0.99).r0 - 1.0); });
}

void green_suite(std::vector<CheckResult>& out) {
  using namespace green;
  Suite s(out, "green-functions");
  s.check("reciprocity", 1e-10, [] {
    double worst = 0.0;
    for (double b : {0.5, 2.0 / 3.0, 0.9}) {
      const Medium m(1.0, b);
      for (double x : {0.2, 0.6, 1.0})
        for (double t : {0.5, 1.5, 2.5}) {
          const double scale = std::max(1.0, t * green_signalling({x, t}, m));
          worst = std::max(worst, std::abs(reciprocity_residual({x, t}, m)) / scale);
        }
    }
    return worst;
  });
  s.check("scaling", 1e-12, [] {
    double worst = 0.0;
    const Medium m(1.0, 0.75);
    for (double p : {0.5, 2.0})
      for (double q : {0.5, 2.0}) {
        const ScalingCheck c = scaling_check({0.7, 1.3}, m, p, q);
        worst = std::max({worst, rel(c.cauchy.lhs, c.cauchy.rhs),
                          rel(c.signalling.lhs, c.signalling.rhs)});
      }
    return worst;
  });
  s.check("heat-limit", 1e-14, [] {
    const Medium m(1.0, 0.5);
    const auto lim = std::get<DiffusionLimit>(classical_limits({0.8, 1.5}, 1.0, 0.5));
    return std::max(rel(green_cauchy({0.8, 1.5}, m), lim.cauchy),
                    rel(green_signalling({0.8, 1.5}, m), lim.signalling));
  });
}

void stable_suite(std::vector<CheckResult>& out) {
  using namespace stable;
  Suite s(out, "stable-distributions");
  s.check("levy", 1e-10, [] {
    double worst = 0.0;
    for (double y = 0.1; y <= 10.0; y += 0.1)
      worst = std::max(worst, std::abs(stable_pdf(y, StableParams(0.5, -0.5)) -
                                       levy_pdf(y, LevyParams(0.5))));
    return worst;
  });
  s.check("gauss", 1e-8, [] {
    double worst = 0.0;
    for (double y = -5.0; y <= 5.0; y += 0.25)
      worst = std::max(worst, std::abs(stable_pdf(y, StableParams(2.0, 0.0)) -
                                       gauss_pdf(y, GaussParams(std::sqrt(2.0)))));
    return worst;
  });
  s.check("duality", 1e-8, [] {
    return std::max({std::abs(stable_duality_residual(0.7, 0.75, 0.0)),
                     std::abs(stable_duality_residual(1.3, 0.8, 0.2)),
                     std::abs(stable_duality_residual(2.0, 0.6, -0.1))});
  });
}

void material_suite(std::vector<CheckResult>& out) {
  using namespace material;
  Suite s(out, "constq-material");
  s.check("round-trip", 1e-14, [] {
    double worst = 0.0;
    for (double nu : {1e-3, 0.1, 0.5, 0.9}) worst = std::max(worst, rel(nu_from_q(q_from_nu(nu)), nu));
    return worst;
  });
  s.check("q1000", 1e-12, [] {
    return std::abs(nu_from_q(QFactor::from_q(1000.0)) - 2.0 / kPi * std::atan(1e-3));
  });
  s.check("nearly-elastic-approx", 1e-4, [] {
    return nearly_elastic_approx(QFactor::from_q(100.0)).rel_err_vs_exact;
  });
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  std::vector<CheckResult> out;
  fractional_suite(out);
  wright_suite(out);
  green_suite(out);
  stable_suite(out);
  material_suite(out);
  return out;
}

}  // namespace constq::cli
