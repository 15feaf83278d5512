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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsvtkit/chebyshev.hpp"

namespace qsvtkit {

/// Growth constant C and strip half-width c with |T_n(x+iy)| bounded by
/// cheb_growth_bound for |y| <= c. Calibrated against the exact ellipse
/// radius |z + sqrt(z^2 - 1)| on a dense grid (largest ratio seen: 1.53).
inline constexpr double kChebGrowthC = 1.6;
inline constexpr double kChebGrowthMaxY = 0.5;

/// Semi-axes (a, b) = ((rho + 1/rho) / 2, (rho - 1/rho) / 2) of the
/// Bernstein ellipse E_rho. Throws DomainError for rho < 1.
std::pair<double, double> bernstein_semi_axes(double rho);

/// sigma = 1 + 3 (alpha + sqrt(delta)); (1 + delta) E_{1+alpha} lies inside
/// E_sigma.
double containment_radius(double delta, double alpha);

/// (1 + C sqrt|y|)^n for |x| <= 1, else (|x| + sqrt(x^2 - 1) + C sqrt|xy|)^n.
/// Throws DomainError when |y| > kChebGrowthMaxY.
double cheb_growth_bound(int n, double x, double y, double big_c = kChebGrowthC);

struct ThresholdParams {
  double mu = 0.0;
  double s = 0.0;
  double c_s = 4.0;
};

/// mu = 1 - delta / 2, s = (c_s / delta) sqrt(log(1 / (alpha eps))).
ThresholdParams make_threshold(double delta, double alpha, double eps, double c_s);

/// r(z) = (erf(s (mu + z)) + erf(s (mu - z))) / 2.
cplx erf_threshold(const ThresholdParams& params, cplx z);

/// Inputs of the bounded truncation: f analytic and bounded by M on
/// E_{1+alpha}, delta <= min(1, alpha^2) / C, eps in (0, 1), b > 1.
struct BoundedApproxSpec {
  double big_m = 1.0;
  double alpha = 0.5;
  double delta = 0.1;
  double eps = 1e-3;
  double b = 2.0;
  Parity parity = Parity::kNone;
};

struct BoundedOptions {
  double c_s = 4.0;
  /// The constant C in delta <= min(1, alpha^2) / C.
  double theorem_c = 1.0;
  int grid_points = 10000;
  int ellipse_samples = 512;
  /// When false the erf threshold is skipped (negative control only).
  bool threshold = true;
  /// Largest interpolation degree tried for the outer truncation.
  int max_degree = 1 << 20;
};

struct Window {
  double lo = 0.0;
  double hi = 0.0;
};

/// Polynomial p(x) = poly(x / scale) with its measured window norms.
struct BoundedApproxCertificate {
  std::string target;
  ChebyshevSeries poly;
  double scale = 1.0;
  int degree = 0;
  int inner_degree = 0;
  int trefethen_degree = 0;
  int tail_degree = 0;
  ThresholdParams threshold;
  double ellipse_max = 0.0;  // max |p~| sampled on the outer ellipse

  std::vector<Window> inner;    // |p - f| <= bound_inner
  std::vector<Window> bounded;  // |p| <= bound_bounded
  std::vector<Window> outer;    // |p| <= bound_outer
  double bound_inner = 0.0;
  double bound_bounded = 0.0;
  double bound_outer = 0.0;
  double sup_inner = 0.0;
  double sup_bounded = 0.0;
  double sup_outer = 0.0;
  int grid_points = 0;

  double formula_degree = 0.0;

  cplx operator()(double x) const { return poly(x / scale); }
  /// All three norms within (1 + slack) of their bounds.
  bool passes(double slack = 0.1) const;
};

/// Bounded Chebyshev truncation: inner truncation f_n of f((1+delta) y) / M,
/// multiplication by the erf threshold, and a second truncation on
/// [-b, b] whose degree is the smaller of the Trefethen degree for the
/// sampled ellipse maximum and the first degree whose coefficient tail is
/// below eps / 6. Returns q in the coordinates of f, with windows
/// [-1, 1], [-(1+delta), 1+delta] and [-b, -(1+delta)] u [1+delta, b].
///
/// Throws ValidationError when `spec` is out of range or |f| exceeds M
/// on sampled points of E_{1+alpha}, and ConstantTooSmallError when c_s
/// fails the dominance inequality on |x| in [1, b].
BoundedApproxCertificate bounded_truncation(const ComplexArgFunction& f,
                                            const BoundedApproxSpec& spec,
                                            const BoundedOptions& opt = {});

/// The dominance inequality that c_s must satisfy; returns the smallest
/// margin lhs - rhs over 10^3 points of |x| in [1, b].
double cs_dominance_margin(double c_s, double delta, double b,
                           double big_k = kChebGrowthC);

/// e^{beta x}: close on [-1, 0], bounded by O(1) on [-1, 1].
BoundedApproxCertificate approx_exp_bounded(double beta, double eps,
                                            const BoundedOptions& opt = {});

/// Odd p close to (2/pi) arcsin x on [-(1 - delta), 1 - delta], |p| <= 1.
BoundedApproxCertificate approx_arcsin(double delta, double eps,
                                       const BoundedOptions& opt = {});

/// Even p ~ cos(t arcsin x) and odd q ~ sin(t arcsin x) on [-1/2, 1/2],
/// both bounded by 1 on [-1, 1].
std::pair<BoundedApproxCertificate, BoundedApproxCertificate> approx_trig_arcsin(
    double t, double eps, const BoundedOptions& opt = {});

/// p ~ |delta / x|^c on [delta, 1], |p| <= 3 on [-1, 1], of the requested
/// parity.
BoundedApproxCertificate approx_neg_power(double c, double delta, double eps,
                                          Parity parity,
                                          const BoundedOptions& opt = {});

/// Odd p with |p| <= 1 and |p - sgn| <= eps outside (-delta, delta), from a
/// truncated Chebyshev series of erf(s x), s = sqrt(log(4 / eps)) / delta.
BoundedApproxCertificate approx_sign(double delta, double eps,
                                     const BoundedOptions& opt = {});

/// Degree expressions without constants.
double exp_bounded_formula(double beta, double eps);
double arcsin_formula(double delta, double eps);
double trig_arcsin_formula(double eps);
double neg_power_formula(double c, double delta, double eps);
double sign_formula(double delta, double eps);

/// Partial sum (4/pi) sum_{k<=K} (-1)^k T_{2k+1} / (2k+1) of the sign
/// series, truncated at degree 2K+1 <= degree.
ChebyshevSeries sign_series_truncation(int degree);

/// One row of a parameter sweep.
struct SweepRow {
  std::vector<std::pair<std::string, double>> params;
  double formula_degree = 0.0;
  int achieved_degree = 0;
  double sup_inner = 0.0;
  double sup_bounded = 0.0;
  double sup_outer = 0.0;
  bool passes = false;
};

/// Runs a corollary over a parameter grid. `target` is one of exp, arcsin,
/// trig-arcsin, neg-power, sign; `values` sweeps the target's primary
/// parameter (beta, delta, eps, delta, delta) while `fixed` supplies the
/// rest by name. Throws ValidationError for an unknown target.
std::vector<SweepRow> approx_sweep(const std::string& target,
                                   const std::vector<double>& values,
                                   const std::vector<std::pair<std::string, double>>& fixed,
                                   const BoundedOptions& opt = {});

/// CSV with header params..., formula_degree, achieved_degree, sup_inner,
/// sup_bounded, sup_outer.
std::string sweep_csv(const std::string& target, const std::vector<SweepRow>& rows);

}  // namespace qsvtkit
