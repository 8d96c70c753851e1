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


#include "constq/cli/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "constq/constq.hpp"

namespace constq::cli {

namespace {

using wright::Method;

// Grid of `steps` points from lo to hi inclusive. The weighted form keeps a
// range symmetric about zero exactly symmetric.
std::vector<double> grid(double lo, double hi, int steps) {
  std::vector<double> g(static_cast<std::size_t>(steps));
  const double n = steps - 1;
  for (int i = 0; i < steps; ++i)
    g[static_cast<std::size_t>(i)] = (lo * (n - i) + hi * i) / n;
  return g;
}

std::string num(double v) { return fmt::format("{:.16e}", v); }

void header(std::ostream& os, const std::string& columns) {
  os << "# constq-waves v" << kVersion << '\n' << columns << '\n';
}

struct RangeOpts {
  double lo;
  double hi;
  int steps;
};

void check_range(const RangeOpts& r) {
  if (!(r.lo < r.hi)) throw CLI::ValidationError("range", "the range minimum must be below its maximum");
  if (r.steps < 2) throw CLI::ValidationError("steps", "at least 2 steps are required");
}

// Exactly one of --beta, --q, --epsilon selects the order β.
struct OrderOpts {
  std::optional<double> beta;
  std::optional<double> q;
  std::optional<double> epsilon;

  bool allow_epsilon = false;

  void add(CLI::App* cmd, bool with_epsilon) {
    allow_epsilon = with_epsilon;
    auto* b = cmd->add_option("--beta", beta, "Order beta in (0,1)")->check(CLI::Range(0.0, 1.0));
    auto* qo = cmd->add_option("--q", q, "Quality factor Q > 0 (beta = 1 - nu/2)")
                   ->check(CLI::PositiveNumber);
    b->excludes(qo);
    if (with_epsilon) {
      auto* e = cmd->add_option("--epsilon", epsilon, "Nearly elastic order beta = 1 - epsilon")
                    ->check(CLI::Range(0.0, 0.5));
      e->excludes(b)->excludes(qo);
    }
  }

  double resolve() const {
    const int given = beta.has_value() + q.has_value() + epsilon.has_value();
    if (given != 1)
      throw CLI::ValidationError("order", "exactly one of --beta, --q" +
                                              std::string(allow_epsilon ? ", --epsilon" : "") +
                                              " is required");
    double b = 0.0;
    if (beta) b = *beta;
    if (q) b = 1.0 - 0.5 * material::nu_from_q(material::QFactor::from_q(*q));
    if (epsilon) b = 1.0 - *epsilon;
    if (!(b > 0.0 && b < 1.0)) throw CLI::ValidationError("order", "beta must lie in (0,1)");
    return b;
  }
};

Method parse_method(const std::string& s) {
  try {
    return wright::method_from_string(s);
  } catch (const Error&) {
    throw CLI::ValidationError("--method", "unknown method '" + s + "'");
  }
}

// --- eval-m -----------------------------------------------------------------

struct EvalMOpts {
  OrderOpts order;
  RangeOpts range{0.0, 4.0, 401};
  std::string method = "auto";
};

void cmd_eval_m(const EvalMOpts& o, std::ostream& os) {
  check_range(o.range);
  if (o.range.lo < 0.0) throw CLI::ValidationError("--rmin", "r must be >= 0");
  const wright::AuxFunctionParams p(o.order.resolve(), parse_method(o.method));
  header(os, "r,M,F,method,est_abs_error");
  for (double r : grid(o.range.lo, o.range.hi, o.range.steps)) {
    const wright::EvalResult m = wright::m_aux(r, p);
    const wright::EvalResult f = wright::f_aux(r, p);
    os << num(r) << ',' << num(m.value) << ',' << num(f.value) << ','
       << wright::to_string(m.method_used) << ',' << num(m.est_abs_error) << '\n';
  }
}

// --- pulse ------------------------------------------------------------------

struct PulseOpts {
  OrderOpts order;
  std::string axis = "space";
  double D = 1.0;
  double t = 1.0;
  double x = 1.0;
  std::optional<double> xmin, xmax, tmin, tmax;
  int steps = 401;
  std::string method = "auto";
};

void cmd_pulse(const PulseOpts& o, std::ostream& os) {
  const green::Medium m(o.D, o.order.resolve());
  const Method method = parse_method(o.method);
  if (o.axis == "space") {
    if (!(o.t > 0.0)) throw CLI::ValidationError("--t", "t must be > 0");
    const RangeOpts r{o.xmin.value_or(-2.0), o.xmax.value_or(2.0), o.steps};
    check_range(r);
    header(os, "x,G_c");
    for (double x : grid(r.lo, r.hi, r.steps))
      os << num(x) << ',' << num(green::green_cauchy({x, o.t}, m, method)) << '\n';
    return;
  }
  if (!(o.x > 0.0)) throw CLI::ValidationError("--x", "x must be > 0");
  const RangeOpts r{o.tmin.value_or(0.0), o.tmax.value_or(2.0), o.steps};
  check_range(r);
  if (r.lo < 0.0) throw CLI::ValidationError("--tmin", "t must be >= 0");
  header(os, "t,G_s");
  for (double t : grid(r.lo, r.hi, r.steps)) {
    // G_s(x, 0+) = 0 for x > 0.
    const double v = t > 0.0 ? green::green_signalling({o.x, t}, m, method) : 0.0;
    os << num(t) << ',' << num(v) << '\n';
  }
}

// --- material ---------------------------------------------------------------

struct MaterialOpts {
  std::optional<double> nu;
  std::optional<double> q;
};

void cmd_material(const MaterialOpts& o, std::ostream& os) {
  if (o.nu.has_value() == o.q.has_value())
    throw CLI::ValidationError("material", "exactly one of --nu, --q is required");
  const material::QFactor qf = o.q ? material::QFactor::from_q(*o.q) : material::q_from_nu(*o.nu);
  const double nu = o.q ? material::nu_from_q(qf) : *o.nu;
  nlohmann::ordered_json j;
  j["nu"] = nu;
  if (qf.infinite) {
    j["q_inv"] = "infinite";
    j["beta"] = 1.0 - 0.5 * nu;
    j["nu_approx"] = nullptr;
    j["approx_rel_err"] = nullptr;
  } else {
    const material::NearlyElastic ne = material::nearly_elastic_approx(qf);
    j["q_inv"] = qf.q_inv;
    j["beta"] = 1.0 - 0.5 * nu;
    j["nu_approx"] = ne.nu_approx;
    j["approx_rel_err"] = ne.rel_err_vs_exact;
  }
  os << j.dump(2) << '\n';
}

// --- stable -----------------------------------------------------------------

struct StableOpts {
  double alpha = 0.5;
  double theta = -0.5;
  RangeOpts range{0.0, 10.0, 401};
};

stable::StableValue stable_point(double y, const stable::StableParams& p) {
  if (y > 0.0) return stable::stable_pdf_eval(y, p);
  if (y < 0.0) return stable::stable_pdf_eval(-y, stable::StableParams(p.alpha, -p.theta));
  return {stable::stable_pdf(0.0, p), stable::Path::closed_form};
}

// Elementary density when one exists for (α, θ), else NaN.
std::function<double(double)> closed_form(const stable::StableParams& p) {
  if (p.alpha == 0.5 && p.theta == -0.5)
    return [](double y) { return y > 0.0 ? stable::levy_pdf(y, stable::LevyParams(0.5)) : 0.0; };
  if (p.alpha == 0.5 && p.theta == 0.5)
    return [](double y) { return y < 0.0 ? stable::levy_pdf(-y, stable::LevyParams(0.5)) : 0.0; };
  if (p.alpha == 2.0)
    return [](double y) { return stable::gauss_pdf(y, stable::GaussParams(std::sqrt(2.0))); };
  if (p.alpha == 1.0 && p.theta == 0.0) return [](double y) { return stable::cauchy_pdf(y, 1.0); };
  return [](double) { return std::nan(""); };
}

void cmd_stable(const StableOpts& o, std::ostream& os) {
  check_range(o.range);
  std::optional<stable::StableParams> p;
  try {
    p.emplace(o.alpha, o.theta);
  } catch (const DomainError& e) {
    throw CLI::ValidationError("stable", e.what());
  }
  const auto exact = closed_form(*p);
  header(os, "y,p,path,closed_form");
  for (double y : grid(o.range.lo, o.range.hi, o.range.steps)) {
    const stable::StableValue v = stable_point(y, *p);
    os << num(y) << ',' << num(v.value) << ',' << stable::to_string(v.path) << ','
       << num(exact(y)) << '\n';
  }
}

// --- fracderiv --------------------------------------------------------------

struct FracOpts {
  std::string kind = "caputo";
  double alpha = 0.5;
  double gamma = 1.0;
  double coefficient = 1.0;
  double tmax = 1.0;
  int steps = 101;
  bool sampled = false;
};

// Limit of c t^γ as t → 0+.
double value_at_zero(const fractional::PowerFunction& p) {
  if (p.is_zero() || p.exponent > 0.0) return 0.0;
  if (p.exponent == 0.0) return p.coefficient;
  return std::copysign(HUGE_VAL, p.coefficient);
}

void cmd_fracderiv(const FracOpts& o, std::ostream& os) {
  if (!(o.tmax > 0.0)) throw CLI::ValidationError("--tmax", "tmax must be > 0");
  if (o.steps < 3) throw CLI::ValidationError("--steps", "at least 3 steps are required");
  const fractional::PowerFunction f(o.coefficient, o.gamma);
  const fractional::FractionalOrder order(o.alpha);
  fractional::PowerFunction exact;
  if (o.kind == "integral") {
    exact = fractional::frac_integral_power(f, order);
  } else {
    const auto kind = o.kind == "caputo" ? fractional::DerivativeKind::caputo
                                         : fractional::DerivativeKind::riemann_liouville;
    exact = fractional::frac_derivative_power(f, order, kind);
  }

  std::vector<double> sampled;
  if (o.sampled) {
    if (o.kind != "caputo")
      throw CLI::ValidationError("--sampled", "sampled evaluation is available for --kind caputo");
    const double dt = o.tmax / (o.steps - 1);
    std::vector<double> v(static_cast<std::size_t>(o.steps));
    for (int i = 0; i < o.steps; ++i) v[static_cast<std::size_t>(i)] = f(i * dt);
    sampled = fractional::caputo_derivative_sampled(fractional::SampledFunction(dt, std::move(v)),
                                                    order)
                  .values;
  }

  header(os, o.sampled ? "t,analytic,sampled" : "t,analytic");
  const std::vector<double> ts = grid(0.0, o.tmax, o.steps);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double t = ts[i];
    const double a = t > 0.0 ? exact(t) : value_at_zero(exact);
    os << num(t) << ',' << num(a);
    if (o.sampled) os << ',' << num(sampled[i]);
    os << '\n';
  }
}

// --- selftest ---------------------------------------------------------------

bool cmd_selftest(std::ostream& os) {
  bool ok = true;
  int failed = 0;
  const std::vector<CheckResult> results = run_selftest();
  for (const CheckResult& r : results) {
    os << fmt::format("{} {}/{} residual={:.3e} tol={:.1e}{}\n", r.passed ? "PASS" : "FAIL", r.suite,
                      r.name, r.residual, r.tolerance, r.note.empty() ? "" : " (" + r.note + ")");
    if (!r.passed) {
      ok = false;
      ++failed;
    }
  }
  os << fmt::format("{} of {} checks passed\n", results.size() - failed, results.size());
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fundamental solutions of the time-fractional diffusion-wave equation"};
  app.name("constq-waves");
  app.set_version_flag("--version", std::string("constq-waves ") + kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  app.add_option("--out", out_path, "Write the table to this file instead of stdout");

  EvalMOpts em;
  auto* c_em = app.add_subcommand("eval-m", "Tabulate M(r;beta) and F(r;beta)");
  em.order.add(c_em, false);
  c_em->add_option("--rmin", em.range.lo, "Smallest r")->capture_default_str();
  c_em->add_option("--rmax", em.range.hi, "Largest r")->capture_default_str();
  c_em->add_option("--steps", em.range.steps, "Number of grid points")->capture_default_str();
  c_em->add_option("--method", em.method, "auto, series, saddle or contour")->capture_default_str();

  PulseOpts pu;
  auto* c_pu = app.add_subcommand("pulse", "Tabulate the Cauchy or signalling Green function");
  pu.order.add(c_pu, true);
  c_pu->add_option("--axis", pu.axis, "space (G_c at fixed t) or time (G_s at fixed x)")
      ->check(CLI::IsMember({"space", "time"}))
      ->capture_default_str();
  c_pu->add_option("--D", pu.D, "Diffusion constant")->check(CLI::PositiveNumber)->capture_default_str();
  c_pu->add_option("--t", pu.t, "Fixed time for --axis space")->capture_default_str();
  c_pu->add_option("--x", pu.x, "Fixed position for --axis time")->capture_default_str();
  c_pu->add_option("--xmin", pu.xmin, "Smallest x [-2]");
  c_pu->add_option("--xmax", pu.xmax, "Largest x [2]");
  c_pu->add_option("--tmin", pu.tmin, "Smallest t [0]");
  c_pu->add_option("--tmax", pu.tmax, "Largest t [2]");
  c_pu->add_option("--steps", pu.steps, "Number of grid points")->capture_default_str();
  c_pu->add_option("--method", pu.method, "auto, series, saddle or contour")->capture_default_str();

  MaterialOpts ma;
  auto* c_ma = app.add_subcommand("material", "Convert between nu and Q for a power-law solid");
  auto* o_nu = c_ma->add_option("--nu", ma.nu, "Creep exponent nu in (0,1]")
                   ->check(CLI::Range(0.0, 1.0));
  c_ma->add_option("--q", ma.q, "Quality factor Q > 0")->check(CLI::PositiveNumber)->excludes(o_nu);

  StableOpts st;
  auto* c_st = app.add_subcommand("stable", "Tabulate the stable density p_alpha(y;theta)");
  c_st->add_option("--alpha", st.alpha, "Index alpha in (0,2]")->capture_default_str();
  c_st->add_option("--theta", st.theta, "Skewness theta")->capture_default_str();
  c_st->add_option("--ymin", st.range.lo, "Smallest y")->capture_default_str();
  c_st->add_option("--ymax", st.range.hi, "Largest y")->capture_default_str();
  c_st->add_option("--steps", st.range.steps, "Number of grid points")->capture_default_str();

  FracOpts fr;
  auto* c_fr = app.add_subcommand("fracderiv", "Fractional integral or derivative of c t^gamma");
  c_fr->add_option("--kind", fr.kind, "caputo, riemann-liouville or integral")
      ->check(CLI::IsMember({"caputo", "riemann-liouville", "integral"}))
      ->capture_default_str();
  c_fr->add_option("--alpha", fr.alpha, "Order alpha")->check(CLI::NonNegativeNumber)->capture_default_str();
  c_fr->add_option("--gamma", fr.gamma, "Exponent gamma > -1")->capture_default_str();
  c_fr->add_option("--coef", fr.coefficient, "Coefficient c")->capture_default_str();
  c_fr->add_option("--tmax", fr.tmax, "Largest t")->capture_default_str();
  c_fr->add_option("--steps", fr.steps, "Number of grid points")->capture_default_str();
  c_fr->add_flag("--sampled", fr.sampled, "Add the product-trapezoidal Caputo derivative of the samples");

  auto* c_self = app.add_subcommand("selftest", "Run the invariant suites of every module");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& os = out_path.empty() ? out : file;

  try {
    if (c_em->parsed()) cmd_eval_m(em, os);
    if (c_pu->parsed()) cmd_pulse(pu, os);
    if (c_ma->parsed()) cmd_material(ma, os);
    if (c_st->parsed()) cmd_stable(st, os);
    if (c_fr->parsed()) cmd_fracderiv(fr, os);
    if (c_self->parsed() && !cmd_selftest(os)) return kExitEvaluation;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvaluation;
  }
  os.flush();
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"constq-waves"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace constq::cli
