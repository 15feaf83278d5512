// Copyright 2026 The qsvtkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsvtkit/bounded.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "qsvtkit/errors.hpp"
#include "qsvtkit/format.hpp"
#include "qsvtkit/special.hpp"

namespace qsvtkit {

namespace {

constexpr double kPi = 3.14159265358979323846;
// alpha = kappa / sqrt(beta) for the exponential.
constexpr double kExpKappa = 2.0;
constexpr double kTrigDelta = 0.5;
constexpr int kDominanceSamples = 1000;

void mask_parity(ChebyshevSeries& s, Parity parity) {
  if (parity == Parity::kNone) return;
  const std::size_t first = parity == Parity::kEven ? 1 : 0;
  for (std::size_t k = first; k < s.coeffs.size(); k += 2) s.coeffs[k] = 0.0;
  s.parity = parity;
}

double sup_over(const std::function<double(double)>& g,
                const std::vector<Window>& windows, int points) {
  double m = 0.0;
  for (const auto& w : windows) {
    if (!(w.hi > w.lo)) continue;
    m = std::max(m, measure_sup(g, w.lo, w.hi, points));
  }
  return m;
}

// Interpolates h at doubling degrees until the upper half of the
// coefficients carries l1 mass <= tol.
ChebyshevSeries converged_series(const RealArgFunction& h, double tol,
                                 int max_degree) {
  int n = 64;
  while (true) {
    ChebyshevSeries c = series_from_interpolant(h, n);
    const double tail = c.tail_l1(n / 2);
    if (tail <= tol) return c;
    if (n >= max_degree) {
      throw ConvergenceError("bounded truncation: coefficients still carry " +
                                 format_number(tail) + " beyond degree " +
                                 std::to_string(n / 2),
                             tail);
    }
    n *= 2;
  }
}

// Smallest m with sum_{k>m} |c_k| <= tol.
int tail_degree(const ChebyshevSeries& c, double tol) {
  int m = static_cast<int>(c.coeffs.size()) - 1;
  double tail = 0.0;
  while (m > 0 && tail + std::abs(c.coeffs[m]) <= tol) {
    tail += std::abs(c.coeffs[m]);
    --m;
  }
  return std::max(m, 0);
}

cplx ellipse_point(double rho, double theta) {
  const auto [a, b] = bernstein_semi_axes(rho);
  return {a * std::cos(theta), b * std::sin(theta)};
}

void require_open_unit(double v, const char* name, const char* who) {
  if (!(v > 0.0 && v < 1.0)) {
    throw ValidationError(std::string(who) + ": " + name + " must lie in (0, 1), got " +
                          format_number(v));
  }
}

// Core of the bounded truncation in the coordinates of f.
struct Core {
  ChebyshevSeries q;  // in w = x / b
  int inner_degree = 0;
  int trefethen_degree = 0;
  int tail_degree = 0;
  ThresholdParams threshold;
  double ellipse_max = 0.0;
  double eps_inner = 0.0;  // the eps' = eps / 2 used internally
};

Core run_core(const ComplexArgFunction& f, const BoundedApproxSpec& spec,
              const BoundedOptions& opt) {
  const char* who = "bounded_truncation";
  if (!(spec.big_m > 0.0) || !std::isfinite(spec.big_m)) {
    throw ValidationError(std::string(who) + ": M must be positive and finite");
  }
  if (!(spec.alpha > 0.0)) throw ValidationError(std::string(who) + ": alpha must be positive");
  require_open_unit(spec.eps, "eps", who);
  if (!(spec.b > 1.0)) throw ValidationError(std::string(who) + ": b must exceed 1");
  if (!(opt.theorem_c > 0.0) || !(opt.c_s > 0.0) || opt.grid_points < 2 ||
      opt.ellipse_samples < 4) {
    throw ValidationError(std::string(who) + ": invalid options");
  }
  const double delta_cap = std::min(1.0, spec.alpha * spec.alpha) / opt.theorem_c;
  if (!(spec.delta > 0.0 && spec.delta <= delta_cap)) {
    throw ValidationError(std::string(who) + ": delta = " + format_number(spec.delta) +
                          " outside (0, min(1, alpha^2) / C] = (0, " +
                          format_number(delta_cap) + "]");
  }

  const double rho = 1.0 + spec.alpha;
  for (int k = 0; k < opt.ellipse_samples; ++k) {
    const cplx z = ellipse_point(rho, 2.0 * kPi * k / opt.ellipse_samples);
    const double v = std::abs(f(z));
    if (!(v <= spec.big_m * (1.0 + 1e-9))) {
      throw ValidationError(std::string(who) + ": |f| = " + format_number(v) +
                            " exceeds M = " + format_number(spec.big_m) +
                            " on E_rho at z = " + format_number(z.real()) + " + " +
                            format_number(z.imag()) + "i");
    }
  }

  Core core;
  const double dp = spec.delta / (1.0 + spec.delta);
  const double ep = spec.eps / 2.0;
  const double by = spec.b / (1.0 + spec.delta);
  core.eps_inner = ep;

  auto g = [&](double y) { return f(cplx((1.0 + spec.delta) * y, 0.0)) / spec.big_m; };
  // The ellipse degree assumes g is bounded on E_rho; the coefficient tail
  // covers the case where rescaling by 1 + delta moves a singularity inside.
  const int n_ellipse = std::max(
      1, static_cast<int>(std::ceil(std::log(6.0 / (spec.alpha * ep)) / std::log(rho))));
  const ChebyshevSeries g_series = converged_series(g, ep / 60.0, opt.max_degree);
  const int n = std::max(n_ellipse, tail_degree(g_series, ep / 6.0));
  ChebyshevSeries fn = truncated(series_from_interpolant(g, std::max(4 * n, 16)), n);
  mask_parity(fn, spec.parity);
  core.inner_degree = n;

  core.threshold = make_threshold(dp, spec.alpha, ep, opt.c_s);
  if (opt.threshold) {
    const double margin = cs_dominance_margin(opt.c_s, dp, by);
    if (margin < 0.0) {
      throw ConstantTooSmallError(
          std::string(who) + ": c_s = " + format_number(opt.c_s) +
          " fails the dominance inequality by " + format_number(-margin) +
          "; increase c_s");
    }
  }
  const ThresholdParams thr = core.threshold;
  const bool use_thr = opt.threshold;
  auto ptilde = [&](cplx z) {
    const cplx v = fn(z);
    return use_thr ? erf_threshold(thr, z) * v : v;
  };

  if (!use_thr) {
    // f_n itself, re-expanded exactly on [-b, b].
    ChebyshevSeries plain =
        series_from_interpolant([&](double w) { return fn(cplx(by * w, 0.0)); }, n);
    mask_parity(plain, spec.parity);
    core.q = (spec.big_m / (1.0 + ep)) * plain;
    core.tail_degree = core.trefethen_degree = plain.degree();
    return core;
  }
  ChebyshevSeries phat = converged_series(
      [&](double w) { return ptilde(cplx(by * w, 0.0)); }, ep / 30.0, opt.max_degree);
  mask_parity(phat, spec.parity);

  const double rho_t = 1.0 + dp / by;
  double mt = 0.0;
  // p~ oscillates on the ellipse at roughly the rate of its expansion degree.
  const int samples = std::max(opt.ellipse_samples, 4 * phat.degree());
  for (int k = 0; k < samples; ++k) {
    const cplx z = ellipse_point(rho_t, 2.0 * kPi * k / samples);
    mt = std::max(mt, std::abs(ptilde(by * z)));
  }
  core.ellipse_max = mt;
  // A vanishing p~ (f identically zero) needs degree 0.
  core.trefethen_degree = mt > 0.0 ? trefethen_degree(mt, rho_t, ep / 3.0) : 0;
  core.tail_degree = tail_degree(phat, ep / 3.0);
  const int m = std::min(core.trefethen_degree, core.tail_degree);
  core.q = (spec.big_m / (1.0 + ep)) * truncated(phat, m);
  mask_parity(core.q, spec.parity);
  return core;
}

void fill_from_core(BoundedApproxCertificate& c, const Core& core) {
  c.inner_degree = core.inner_degree;
  c.trefethen_degree = core.trefethen_degree;
  c.tail_degree = core.tail_degree;
  c.threshold = core.threshold;
  c.ellipse_max = core.ellipse_max;
}

// Fills the three sup norms of c against target f.
void measure(BoundedApproxCertificate& c,
             const std::function<double(double)>& target, int points) {
  c.grid_points = points;
  c.degree = c.poly.degree();
  c.sup_inner = sup_over([&](double x) { return std::abs(c(x) - target(x)); },
                         c.inner, points);
  c.sup_bounded = sup_over([&](double x) { return std::abs(c(x)); }, c.bounded, points);
  c.sup_outer = sup_over([&](double x) { return std::abs(c(x)); }, c.outer, points);
}

// Exact re-expansion of the polynomial x -> h(x) of degree <= deg on [-1, 1].
ChebyshevSeries reexpand(const RealArgFunction& h, int deg, Parity parity) {
  ChebyshevSeries s = series_from_interpolant(h, std::max(deg, 1));
  mask_parity(s, parity);
  return s;
}

}  // namespace

std::pair<double, double> bernstein_semi_axes(double rho) {
  if (!(rho >= 1.0)) {
    throw DomainError("bernstein_semi_axes: rho = " + format_number(rho) + " < 1");
  }
  return {0.5 * (rho + 1.0 / rho), 0.5 * (rho - 1.0 / rho)};
}

double containment_radius(double delta, double alpha) {
  return 1.0 + 3.0 * (alpha + std::sqrt(delta));
}

double cheb_growth_bound(int n, double x, double y, double big_c) {
  if (std::abs(y) > kChebGrowthMaxY) {
    throw DomainError("cheb_growth_bound: |y| = " + format_number(std::abs(y)) +
                      " exceeds " + format_number(kChebGrowthMaxY));
  }
  if (n < 0) throw DomainError("cheb_growth_bound: negative degree");
  const double ax = std::abs(x);
  if (ax <= 1.0) return std::pow(1.0 + big_c * std::sqrt(std::abs(y)), n);
  return std::pow(ax + std::sqrt(x * x - 1.0) + big_c * std::sqrt(std::abs(x * y)), n);
}

ThresholdParams make_threshold(double delta, double alpha, double eps, double c_s) {
  ThresholdParams p;
  p.c_s = c_s;
  p.mu = 1.0 - delta / 2.0;
  p.s = (c_s / delta) * std::sqrt(std::max(std::log(1.0 / (alpha * eps)), 0.0));
  return p;
}

cplx erf_threshold(const ThresholdParams& params, cplx z) {
  return 0.5 * (erf_complex(params.s * (params.mu + z)) +
                erf_complex(params.s * (params.mu - z)));
}

double cs_dominance_margin(double c_s, double delta, double b, double big_k) {
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kDominanceSamples; ++i) {
    const double x = 1.0 + (b - 1.0) * i / (kDominanceSamples - 1);
    const double d = x - (1.0 - delta / 2.0);
    const double lhs = c_s * c_s / (2.0 * delta * delta) * d * d;
    const double rhs = (x - 1.0 + std::sqrt(x * x - 1.0) + big_k * std::sqrt(x * delta)) /
                       std::sqrt(delta);
    margin = std::min(margin, lhs - rhs);
  }
  return margin;
}

bool BoundedApproxCertificate::passes(double slack) const {
  const double k = 1.0 + slack;
  return sup_inner <= k * bound_inner && sup_bounded <= k * bound_bounded &&
         sup_outer <= k * bound_outer;
}

BoundedApproxCertificate bounded_truncation(const ComplexArgFunction& f,
                                            const BoundedApproxSpec& spec,
                                            const BoundedOptions& opt) {
  const Core core = run_core(f, spec, opt);
  BoundedApproxCertificate c;
  c.target = "bounded";
  fill_from_core(c, core);
  c.poly = core.q;
  c.scale = spec.b;
  const double e = 1.0 + spec.delta;
  c.inner = {{-1.0, 1.0}};
  c.bounded = {{-e, e}};
  c.outer = {{-spec.b, -e}, {e, spec.b}};
  c.bound_inner = spec.big_m * spec.eps;
  c.bound_bounded = spec.big_m;
  c.bound_outer = spec.big_m * spec.eps;
  c.formula_degree = spec.b / spec.delta * std::log(spec.b / (spec.delta * spec.eps));
  c.grid_points = opt.grid_points;
  c.degree = c.poly.degree();
  c.sup_inner = sup_over([&](double x) { return std::abs(c(x) - f(cplx(x, 0.0))); },
                         c.inner, opt.grid_points);
  c.sup_bounded = sup_over([&](double x) { return std::abs(c(x)); }, c.bounded,
                           opt.grid_points);
  c.sup_outer = sup_over([&](double x) { return std::abs(c(x)); }, c.outer, opt.grid_points);
  return c;
}

double exp_bounded_formula(double beta, double eps) { return beta * std::log(beta / eps); }
double arcsin_formula(double delta, double eps) {
  return std::log(1.0 / (delta * eps)) / std::sqrt(delta);
}
double trig_arcsin_formula(double eps) { return std::log(1.0 / eps); }
double neg_power_formula(double c, double delta, double eps) {
  return std::max(1.0, c) / delta * std::log(1.0 / (delta * eps));
}
double sign_formula(double delta, double eps) {
  return std::log(1.0 / (delta * eps)) / delta;
}

BoundedApproxCertificate approx_exp_bounded(double beta, double eps,
                                            const BoundedOptions& opt) {
  if (!(beta >= 1.0)) {
    throw ValidationError("approx_exp_bounded: beta must be >= 1, got " + format_number(beta));
  }
  require_open_unit(eps, "eps", "approx_exp_bounded");
  BoundedApproxSpec spec;
  spec.alpha = kExpKappa / std::sqrt(beta);
  spec.delta = std::min(1.0, spec.alpha * spec.alpha) / opt.theorem_c;
  spec.b = 3.0;
  const double a = bernstein_semi_axes(1.0 + spec.alpha).first;
  // Bound on E_rho and on the real window [-(1+delta), 1+delta].
  spec.big_m = std::exp(beta * std::max(a - 1.0, spec.delta) / 2.0);
  spec.eps = eps / spec.big_m;
  auto g = [beta](cplx y) { return std::exp(beta * (y - 1.0) / 2.0); };
  const Core core = run_core(g, spec, opt);

  BoundedApproxCertificate c;
  c.target = "exp";
  fill_from_core(c, core);
  const ChebyshevSeries q = core.q;
  c.poly = reexpand([&q](double x) { return q((2.0 * x + 1.0) / 3.0); }, q.degree(),
                    Parity::kNone);
  const double edge = std::min(1.0, spec.delta / 2.0);
  c.inner = {{-1.0, 0.0}};
  c.bounded = {{-1.0, edge}};
  c.outer = {{edge, 1.0}};
  c.bound_inner = eps;
  c.bound_bounded = spec.big_m;
  c.bound_outer = eps;
  c.formula_degree = exp_bounded_formula(beta, eps);
  measure(c, [beta](double x) { return std::exp(beta * x); }, opt.grid_points);
  return c;
}

BoundedApproxCertificate approx_arcsin(double delta, double eps,
                                       const BoundedOptions& opt) {
  require_open_unit(delta, "delta", "approx_arcsin");
  require_open_unit(eps, "eps", "approx_arcsin");
  BoundedApproxSpec spec;
  spec.alpha = std::sqrt(2.0 * delta);
  spec.delta = std::min(delta, std::min(1.0, spec.alpha * spec.alpha)) / opt.theorem_c;
  spec.b = 1.0 / (1.0 - delta);
  spec.big_m = kPi / 2.0;
  spec.eps = eps;
  spec.parity = Parity::kOdd;
  auto f = [delta](cplx y) { return std::asin((1.0 - delta) * y); };
  const Core core = run_core(f, spec, opt);

  BoundedApproxCertificate c;
  c.target = "arcsin";
  fill_from_core(c, core);
  // y = x / (1 - delta) and w = y / b, so w = x.
  c.poly = (2.0 / kPi) * core.q;
  mask_parity(c.poly, Parity::kOdd);
  const double edge = std::min(1.0, (1.0 + spec.delta) * (1.0 - delta));
  c.inner = {{-(1.0 - delta), 1.0 - delta}};
  c.bounded = {{-1.0, 1.0}};
  c.outer = {{-1.0, -edge}, {edge, 1.0}};
  c.bound_inner = eps;
  c.bound_bounded = 1.0;
  c.bound_outer = eps;
  c.formula_degree = arcsin_formula(delta, eps);
  measure(c, [](double x) { return 2.0 / kPi * std::asin(x); }, opt.grid_points);
  return c;
}

std::pair<BoundedApproxCertificate, BoundedApproxCertificate> approx_trig_arcsin(
    double t, double eps, const BoundedOptions& opt) {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw ValidationError("approx_trig_arcsin: t must lie in [-1, 1], got " +
                          format_number(t));
  }
  require_open_unit(eps, "eps", "approx_trig_arcsin");
  BoundedApproxSpec spec;
  spec.alpha = 1.0;
  spec.delta = kTrigDelta / opt.theorem_c;
  spec.b = 2.0;
  spec.big_m = std::cosh(kPi / 2.0);
  spec.eps = eps / (3.0 * spec.big_m);

  auto build = [&](bool cosine) {
    BoundedApproxSpec s = spec;
    s.parity = cosine ? Parity::kEven : Parity::kOdd;
    ComplexArgFunction f;
    if (cosine) {
      f = [t](cplx y) { return std::cos(t * std::asin(y / 2.0)); };
    } else {
      f = [t](cplx y) { return std::sin(t * std::asin(y / 2.0)); };
    }
    const Core core = run_core(f, s, opt);
    BoundedApproxCertificate c;
    c.target = cosine ? "trig-arcsin-cos" : "trig-arcsin-sin";
    fill_from_core(c, core);
    // |q| <= (1 + M eps') / (1 + eps') on the bounded window; rescale to 1.
    const double ep = core.eps_inner;
    const double shrink = (1.0 + ep) / (1.0 + spec.big_m * ep);
    c.poly = shrink * core.q;  // y = 2x and w = y / 2, so w = x.
    mask_parity(c.poly, s.parity);
    const double edge = std::min(1.0, (1.0 + spec.delta) / 2.0);
    c.inner = {{-0.5, 0.5}};
    c.bounded = {{-1.0, 1.0}};
    c.outer = {{-1.0, -edge}, {edge, 1.0}};
    c.bound_inner = eps;
    c.bound_bounded = 1.0;
    c.bound_outer = shrink * spec.big_m * spec.eps;
    c.formula_degree = trig_arcsin_formula(eps);
    if (cosine) {
      measure(c, [t](double x) { return std::cos(t * std::asin(x)); }, opt.grid_points);
    } else {
      measure(c, [t](double x) { return std::sin(t * std::asin(x)); }, opt.grid_points);
    }
    return c;
  };
  return {build(true), build(false)};
}

BoundedApproxCertificate approx_neg_power(double c_pow, double delta, double eps,
                                          Parity parity, const BoundedOptions& opt) {
  if (!(c_pow > 0.0)) {
    throw ValidationError("approx_neg_power: c must be positive, got " + format_number(c_pow));
  }
  require_open_unit(delta, "delta", "approx_neg_power");
  require_open_unit(eps, "eps", "approx_neg_power");
  if (parity == Parity::kNone) {
    throw ValidationError("approx_neg_power: parity must be even or odd");
  }
  const double cm = std::max(1.0, c_pow);
  BoundedApproxSpec spec;
  spec.alpha = std::sqrt(delta / (4.0 * cm));
  spec.delta = std::min(1.0, spec.alpha * spec.alpha) / opt.theorem_c;
  // x = -1 maps to y = -(3 + delta) / (1 - delta), which must stay in [-b, b].
  spec.b = std::max(4.0, (3.0 + delta) / (1.0 - delta));
  spec.big_m = 1.5;
  spec.eps = eps / 3.0;
  auto g = [c_pow, delta](cplx y) {
    return std::pow(delta, c_pow) *
           std::pow((1.0 - delta) / 2.0 * y + (1.0 + delta) / 2.0, -c_pow);
  };
  const Core core = run_core(g, spec, opt);

  BoundedApproxCertificate c;
  c.target = "neg-power";
  fill_from_core(c, core);
  const ChebyshevSeries q = core.q;
  const double b = spec.b;
  const double sign = parity == Parity::kEven ? 1.0 : -1.0;
  auto to_w = [delta, b](double x) { return 2.0 / (1.0 - delta) * (x - (1.0 + delta) / 2.0) / b; };
  c.poly = reexpand([&](double x) { return q(to_w(x)) + sign * q(to_w(-x)); }, q.degree(),
                    parity);
  c.inner = {{delta, 1.0}};
  c.bounded = {{-1.0, 1.0}};
  c.bound_inner = eps;
  c.bound_bounded = 3.0;
  c.bound_outer = 0.0;
  c.formula_degree = neg_power_formula(c_pow, delta, eps);
  measure(c, [c_pow, delta](double x) { return std::pow(std::abs(delta / x), c_pow); },
          opt.grid_points);
  return c;
}

BoundedApproxCertificate approx_sign(double delta, double eps,
                                     const BoundedOptions& opt) {
  require_open_unit(delta, "delta", "approx_sign");
  require_open_unit(eps, "eps", "approx_sign");
  const double s = std::sqrt(std::log(4.0 / eps)) / delta;
  auto h = [s](double x) { return cplx(std::erf(s * x), 0.0); };
  ChebyshevSeries series = converged_series(h, eps / 40.0, opt.max_degree);
  mask_parity(series, Parity::kOdd);
  const int m = tail_degree(series, eps / 4.0);

  BoundedApproxCertificate c;
  c.target = "sign";
  c.poly = (1.0 / (1.0 + eps / 4.0)) * truncated(series, m);
  mask_parity(c.poly, Parity::kOdd);
  c.tail_degree = m;
  c.threshold.s = s;
  c.threshold.mu = 0.0;
  c.threshold.c_s = 0.0;
  c.inner = {{-1.0, -delta}, {delta, 1.0}};
  c.bounded = {{-1.0, 1.0}};
  c.bound_inner = eps;
  c.bound_bounded = 1.0;
  c.bound_outer = 0.0;
  c.formula_degree = sign_formula(delta, eps);
  measure(c, [](double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); },
          opt.grid_points);
  return c;
}

ChebyshevSeries sign_series_truncation(int degree) {
  if (degree < 1) throw DomainError("sign_series_truncation: degree must be >= 1");
  std::vector<cplx> coeffs(degree + 1, cplx(0.0, 0.0));
  for (int k = 0; 2 * k + 1 <= degree; ++k) {
    coeffs[2 * k + 1] = (k % 2 == 0 ? 4.0 : -4.0) / (kPi * (2 * k + 1));
  }
  return ChebyshevSeries(std::move(coeffs), Parity::kOdd);
}

namespace {

double fixed_value(const std::vector<std::pair<std::string, double>>& fixed,
                   const std::string& name, double fallback) {
  for (const auto& [k, v] : fixed)
    if (k == name) return v;
  return fallback;
}

SweepRow row_from(const BoundedApproxCertificate& c,
                  std::vector<std::pair<std::string, double>> params) {
  SweepRow r;
  r.params = std::move(params);
  r.formula_degree = c.formula_degree;
  r.achieved_degree = c.degree;
  r.sup_inner = c.sup_inner;
  r.sup_bounded = c.sup_bounded;
  r.sup_outer = c.sup_outer;
  r.passes = c.passes();
  return r;
}

std::vector<std::string> param_names(const std::string& target) {
  if (target == "exp") return {"beta", "eps"};
  if (target == "arcsin") return {"delta", "eps"};
  if (target == "trig-arcsin") return {"t", "eps"};
  if (target == "neg-power") return {"c", "delta", "eps", "parity"};
  if (target == "sign") return {"delta", "eps"};
  throw ValidationError("unknown approximation target '" + target +
                        "' (expected exp, arcsin, trig-arcsin, neg-power or sign)");
}

}  // namespace

std::vector<SweepRow> approx_sweep(
    const std::string& target, const std::vector<double>& values,
    const std::vector<std::pair<std::string, double>>& fixed,
    const BoundedOptions& opt) {
  param_names(target);
  std::vector<SweepRow> rows;
  const double eps = fixed_value(fixed, "eps", 1e-4);
  for (double v : values) {
    if (target == "exp") {
      rows.push_back(row_from(approx_exp_bounded(v, eps, opt), {{"beta", v}, {"eps", eps}}));
    } else if (target == "arcsin") {
      rows.push_back(row_from(approx_arcsin(v, eps, opt), {{"delta", v}, {"eps", eps}}));
    } else if (target == "trig-arcsin") {
      const double t = fixed_value(fixed, "t", 1.0);
      const auto [p, q] = approx_trig_arcsin(t, v, opt);
      SweepRow r = row_from(p, {{"t", t}, {"eps", v}});
      r.achieved_degree = std::max(p.degree, q.degree);
      r.sup_inner = std::max(p.sup_inner, q.sup_inner);
      r.sup_bounded = std::max(p.sup_bounded, q.sup_bounded);
      r.sup_outer = std::max(p.sup_outer, q.sup_outer);
      r.passes = p.passes() && q.passes();
      rows.push_back(r);
    } else if (target == "neg-power") {
      const double c = fixed_value(fixed, "c", 1.0);
      const double par = fixed_value(fixed, "parity", 1.0);
      const Parity parity = par == 0.0 ? Parity::kEven : Parity::kOdd;
      rows.push_back(row_from(approx_neg_power(c, v, eps, parity, opt),
                              {{"c", c}, {"delta", v}, {"eps", eps}, {"parity", par}}));
    } else {
      rows.push_back(row_from(approx_sign(v, eps, opt), {{"delta", v}, {"eps", eps}}));
    }
  }
  return rows;
}

std::string sweep_csv(const std::string& target, const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  for (const auto& name : param_names(target)) os << name << ',';
  os << "formula_degree,achieved_degree,sup_inner,sup_bounded,sup_outer\n";
  for (const auto& r : rows) {
    for (const auto& [k, v] : r.params) os << format_number(v) << ',';
    os << format_number(r.formula_degree) << ',' << r.achieved_degree << ','
       << format_number(r.sup_inner) << ',' << format_number(r.sup_bounded) << ','
       << format_number(r.sup_outer) << '\n';
  }
  return os.str();
}

}  // namespace qsvtkit
