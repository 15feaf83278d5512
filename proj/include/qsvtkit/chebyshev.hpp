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

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qsvtkit/matrix.hpp"

namespace qsvtkit {

enum class Parity { kEven, kOdd, kNone };

std::string parity_name(Parity p);
Parity parse_parity(const std::string& s);

/// Parity implied by the support of `coeffs` (entries with |c| <= tol are
/// treated as zero). The zero vector is reported as even.
Parity detect_parity(const std::vector<cplx>& coeffs, double tol = 0.0);

/// Function of a real argument on [-1, 1].
using RealArgFunction = std::function<cplx(double)>;
/// Function that accepts complex arguments (analytic continuation).
using ComplexArgFunction = std::function<cplx(cplx)>;

/// Finite Chebyshev series sum_k coeffs[k] T_k(x).
struct ChebyshevSeries {
  std::vector<cplx> coeffs;
  Parity parity = Parity::kNone;

  ChebyshevSeries() = default;
  explicit ChebyshevSeries(std::vector<cplx> c, Parity p = Parity::kNone)
      : coeffs(std::move(c)), parity(p) {}

  /// Index of the last nonzero coefficient; 0 for the zero series.
  int degree() const;

  /// Clenshaw evaluation.
  cplx operator()(cplx z) const;
  cplx operator()(double x) const { return (*this)(cplx(x, 0.0)); }

  /// Throws ValidationError if the declared parity disagrees with the
  /// support beyond `tol`.
  void check_parity(double tol = 1e-12) const;

  /// Sum of |coeffs[k]| over k > m.
  double tail_l1(int m) const;

  std::vector<cplx> to_monomial() const;
  static ChebyshevSeries from_monomial(const std::vector<cplx>& mono,
                                       Parity p = Parity::kNone);
};

ChebyshevSeries operator+(const ChebyshevSeries& a, const ChebyshevSeries& b);
ChebyshevSeries operator-(const ChebyshevSeries& a, const ChebyshevSeries& b);
ChebyshevSeries operator*(cplx s, const ChebyshevSeries& a);
/// Product via T_j T_k = (T_{j+k} + T_{|j-k|}) / 2.
ChebyshevSeries operator*(const ChebyshevSeries& a, const ChebyshevSeries& b);

/// x * a(x).
ChebyshevSeries mul_x(const ChebyshevSeries& a);
/// (1 - x^2) * a(x).
ChebyshevSeries mul_one_minus_x2(const ChebyshevSeries& a);
/// Coefficientwise complex conjugate (the conjugate polynomial on the reals).
ChebyshevSeries conj(const ChebyshevSeries& a);
/// Exact derivative.
ChebyshevSeries derivative(const ChebyshevSeries& a);
/// Drops trailing coefficients with magnitude <= tol.
ChebyshevSeries trimmed(const ChebyshevSeries& a, double tol = 0.0);
/// Keeps coefficients 0..m.
ChebyshevSeries truncated(const ChebyshevSeries& a, int m);

/// T_n(z) by the closed form (z + sqrt(z^2-1))^n / 2 + (z - sqrt(z^2-1))^n / 2,
/// with cos(n arccos x) on [-1, 1].
cplx cheb_eval(int n, cplx z);

/// Chebyshev extreme points cos(j pi / n), j = 0..n.
std::vector<double> chebyshev_points(int n);

/// Degree-n interpolant at the n+1 Chebyshev extreme points, via a DCT-I.
/// Degree 0 interpolates at x = 0. Throws EvaluationError naming the node
/// index if f is not finite there.
ChebyshevSeries series_from_interpolant(const RealArgFunction& f, int n);

/// Truncated Chebyshev series from the trapezoid rule on the unit circle,
/// a_k = (1/pi) int_0^{2pi} f(cos theta) e^{i k theta} d theta, with
/// quadrature_factor * (n + 1) nodes.
ChebyshevSeries series_from_quadrature(const RealArgFunction& f, int n,
                                       int quadrature_factor = 8);

/// ceil(log(2M / ((rho - 1) eps)) / log rho), floored at 0.
int trefethen_degree(double big_m, double rho, double eps);

/// 2 M rho^{-n} / (rho - 1).
double trefethen_bound(double big_m, double rho, int n);

/// Upper bound on |I_n(t)|:
/// exp(sqrt(t^2+n^2)) (sqrt((n/t)^2+1) - n/|t|)^n / (2 (n^2+t^2)^{1/4}).
/// Throws DomainError for t = 0 or n < 1.
double carlini_bound(int n, double t);
double log_carlini_bound(int n, double t);

/// The r >= big_t solving (big_t / r)^r = eps for eps in (0, 1].
double solve_r(double big_t, double eps);

/// Degree of a Chebyshev truncation of e^{tx} with uniform error <= eps.
int exp_truncation_degree(double t, double eps);

/// Which of the four eps regimes (1..4) the pair (t, eps) falls in; the
/// boundary between regimes 3 and 4 is eps = e^{-|t|}.
int exp_regime(double t, double eps);

/// The asymptotic degree expression of the regime, without constants:
/// 0, sqrt(|t| log(e^|t| / eps)), or |t| + L / log(e + L/|t|) with L = log(1/eps).
double exp_regime_formula(double t, double eps);

/// Sup of g over [lo, hi]: Chebyshev-distributed samples followed by a
/// golden-section refinement around the largest samples.
double measure_sup(const std::function<double(double)>& g, double lo, double hi,
                   int points = 10000, int refine = 8);

}  // namespace qsvtkit
