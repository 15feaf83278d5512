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
#include "qsvtkit/chebyshev.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qsvtkit/errors.hpp"

namespace qsvtkit {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

Parity combine_parity(Parity a, Parity b, bool product) {
  if (a == Parity::kNone || b == Parity::kNone) return Parity::kNone;
  if (!product) return a == b ? a : Parity::kNone;
  return a == b ? Parity::kEven : Parity::kOdd;
}

Parity flip(Parity p) {
  if (p == Parity::kEven) return Parity::kOdd;
  if (p == Parity::kOdd) return Parity::kEven;
  return p;
}

}  // namespace

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::kEven:
      return "even";
    case Parity::kOdd:
      return "odd";
    case Parity::kNone:
      return "none";
  }
  return "none";
}

Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::kEven;
  if (s == "odd") return Parity::kOdd;
  if (s == "none" || s.empty()) return Parity::kNone;
  throw ValidationError("unknown parity '" + s + "' (expected even, odd or none)");
}

Parity detect_parity(const std::vector<cplx>& coeffs, double tol) {
  bool has_even = false;
  bool has_odd = false;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (std::abs(coeffs[k]) <= tol) continue;
    (k % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) return Parity::kNone;
  return has_odd ? Parity::kOdd : Parity::kEven;
}

int ChebyshevSeries::degree() const {
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] != cplx(0.0, 0.0)) return static_cast<int>(k);
  }
  return 0;
}

cplx ChebyshevSeries::operator()(cplx z) const {
  if (coeffs.empty()) return 0.0;
  cplx b1 = 0.0;
  cplx b2 = 0.0;
  const cplx two_z = 2.0 * z;
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    const cplx b0 = coeffs[k] + two_z * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs[0] + z * b1 - b2;
}

void ChebyshevSeries::check_parity(double tol) const {
  if (parity == Parity::kNone) return;
  const std::size_t bad = parity == Parity::kEven ? 1 : 0;
  for (std::size_t k = bad; k < coeffs.size(); k += 2) {
    if (std::abs(coeffs[k]) > tol) {
      throw ValidationError("series declared " + parity_name(parity) +
                            " has coefficient " + std::to_string(std::abs(coeffs[k])) +
                            " at index " + std::to_string(k));
    }
  }
}

double ChebyshevSeries::tail_l1(int m) const {
  double s = 0.0;
  for (std::size_t k = static_cast<std::size_t>(std::max(m + 1, 0)); k < coeffs.size(); ++k)
    s += std::abs(coeffs[k]);
  return s;
}

std::vector<cplx> ChebyshevSeries::to_monomial() const {
  const std::size_t n = coeffs.size();
  std::vector<cplx> out(std::max<std::size_t>(n, 1), 0.0);
  if (n == 0) return out;
  // Monomial coefficients of T_{k-1} and T_k, advanced by the recurrence.
  std::vector<double> tm1(n, 0.0), tk(n, 0.0), tk1(n, 0.0);
  tm1[0] = 1.0;
  out[0] += coeffs[0];
  if (n == 1) return out;
  tk[1] = 1.0;
  out[1] += coeffs[1];
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::fill(tk1.begin(), tk1.end(), 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) tk1[j + 1] += 2.0 * tk[j];
    for (std::size_t j = 0; j < n; ++j) tk1[j] -= tm1[j];
    for (std::size_t j = 0; j < n; ++j) out[j] += coeffs[k + 1] * tk1[j];
    std::swap(tm1, tk);
    std::swap(tk, tk1);
  }
  return out;
}

ChebyshevSeries ChebyshevSeries::from_monomial(const std::vector<cplx>& mono, Parity p) {
  // Horner's rule in the Chebyshev basis.
  ChebyshevSeries acc(std::vector<cplx>{0.0}, p);
  for (std::size_t k = mono.size(); k-- > 0;) {
    acc = mul_x(acc);
    acc.coeffs[0] += mono[k];
  }
  acc.coeffs.resize(std::max<std::size_t>(mono.size(), 1));
  acc.parity = p;
  return acc;
}

ChebyshevSeries operator+(const ChebyshevSeries& a, const ChebyshevSeries& b) {
  ChebyshevSeries out;
  out.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) out.coeffs[k] += a.coeffs[k];
  for (std::size_t k = 0; k < b.coeffs.size(); ++k) out.coeffs[k] += b.coeffs[k];
  out.parity = combine_parity(a.parity, b.parity, false);
  return out;
}

ChebyshevSeries operator-(const ChebyshevSeries& a, const ChebyshevSeries& b) {
  return a + (-1.0) * b;
}

ChebyshevSeries operator*(cplx s, const ChebyshevSeries& a) {
  ChebyshevSeries out = a;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

ChebyshevSeries operator*(const ChebyshevSeries& a, const ChebyshevSeries& b) {
  ChebyshevSeries out;
  if (a.coeffs.empty() || b.coeffs.empty()) return out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
  for (std::size_t j = 0; j < a.coeffs.size(); ++j) {
    const cplx aj = a.coeffs[j];
    if (aj == cplx(0.0, 0.0)) continue;
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) {
      const cplx h = 0.5 * aj * b.coeffs[k];
      out.coeffs[j + k] += h;
      out.coeffs[j > k ? j - k : k - j] += h;
    }
  }
  out.parity = combine_parity(a.parity, b.parity, true);
  return out;
}

ChebyshevSeries mul_x(const ChebyshevSeries& a) {
  ChebyshevSeries out;
  out.coeffs.assign(a.coeffs.size() + 1, 0.0);
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) {
    if (k == 0) {
      out.coeffs[1] += a.coeffs[0];
    } else {
      out.coeffs[k + 1] += 0.5 * a.coeffs[k];
      out.coeffs[k - 1] += 0.5 * a.coeffs[k];
    }
  }
  out.parity = flip(a.parity);
  return out;
}

ChebyshevSeries mul_one_minus_x2(const ChebyshevSeries& a) {
  ChebyshevSeries out = a - mul_x(mul_x(a));
  out.parity = a.parity;
  return out;
}

ChebyshevSeries conj(const ChebyshevSeries& a) {
  ChebyshevSeries out = a;
  for (auto& c : out.coeffs) c = std::conj(c);
  return out;
}

ChebyshevSeries derivative(const ChebyshevSeries& a) {
  const int n = static_cast<int>(a.coeffs.size()) - 1;
  ChebyshevSeries out;
  out.parity = flip(a.parity);
  if (n <= 0) {
    out.coeffs.assign(1, 0.0);
    return out;
  }
  std::vector<cplx> d(n + 2, 0.0);
  // d_{k-1} = d_{k+1} + 2 k a_k, with d_0 halved at the end.
  for (int k = n; k >= 1; --k) d[k - 1] = d[k + 1] + 2.0 * k * a.coeffs[k];
  d[0] *= 0.5;
  d.resize(n);
  out.coeffs = std::move(d);
  return out;
}

ChebyshevSeries trimmed(const ChebyshevSeries& a, double tol) {
  ChebyshevSeries out = a;
  while (out.coeffs.size() > 1 && std::abs(out.coeffs.back()) <= tol) out.coeffs.pop_back();
  return out;
}

ChebyshevSeries truncated(const ChebyshevSeries& a, int m) {
  ChebyshevSeries out = a;
  if (static_cast<int>(out.coeffs.size()) > m + 1) out.coeffs.resize(m + 1);
  return out;
}

cplx cheb_eval(int n, cplx z) {
  if (n < 0) throw DomainError("cheb_eval: negative degree");
  if (z.imag() == 0.0 && std::abs(z.real()) <= 1.0) {
    return std::cos(n * std::acos(z.real()));
  }
  cplx w = z + std::sqrt(z * z - 1.0);
  if (std::abs(w) < 1.0) w = z - std::sqrt(z * z - 1.0);
  return 0.5 * (std::pow(w, n) + std::pow(w, -n));
}

std::vector<double> chebyshev_points(int n) {
  if (n <= 0) return {0.0};
  std::vector<double> x(n + 1);
  for (int j = 0; j <= n; ++j) x[j] = std::cos(j * kPi / n);
  // Exact symmetry about the origin.
  for (int j = 0; j <= n / 2; ++j) {
    x[n - j] = -x[j];
  }
  if (n % 2 == 0) x[n / 2] = 0.0;
  return x;
}

ChebyshevSeries series_from_interpolant(const RealArgFunction& f, int n) {
  if (n < 0) throw ValidationError("series_from_interpolant: negative degree");
  const std::vector<double> x = chebyshev_points(n);
  std::vector<cplx> y(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    y[j] = f(x[j]);
    if (!is_finite(y[j])) {
      throw EvaluationError("series_from_interpolant: non-finite value at node " +
                            std::to_string(j) + " (x = " + std::to_string(x[j]) + ")");
    }
  }
  if (n == 0) return ChebyshevSeries({y[0]}, Parity::kNone);
  const int len = n + 1;
  std::vector<double> in(len), out_re(len), out_im(len);
  fftw_plan plan = fftw_plan_r2r_1d(len, in.data(), out_re.data(), FFTW_REDFT00,
                                    FFTW_ESTIMATE);
  for (int j = 0; j < len; ++j) in[j] = y[j].real();
  fftw_execute_r2r(plan, in.data(), out_re.data());
  for (int j = 0; j < len; ++j) in[j] = y[j].imag();
  fftw_execute_r2r(plan, in.data(), out_im.data());
  fftw_destroy_plan(plan);
  std::vector<cplx> c(len);
  for (int k = 0; k < len; ++k) c[k] = cplx(out_re[k], out_im[k]) / static_cast<double>(n);
  c[0] *= 0.5;
  c[n] *= 0.5;
  return ChebyshevSeries(std::move(c), Parity::kNone);
}

ChebyshevSeries series_from_quadrature(const RealArgFunction& f, int n,
                                       int quadrature_factor) {
  if (n < 0) throw ValidationError("series_from_quadrature: negative degree");
  if (quadrature_factor < 1) {
    throw ValidationError("series_from_quadrature: quadrature_factor must be >= 1");
  }
  const int nodes = quadrature_factor * (n + 1);
  fftw_complex* buf = fftw_alloc_complex(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double theta = 2.0 * kPi * j / nodes;
    const cplx v = f(std::cos(theta));
    if (!is_finite(v)) {
      fftw_free(buf);
      throw EvaluationError("series_from_quadrature: non-finite value at node " +
                            std::to_string(j));
    }
    buf[j][0] = v.real();
    buf[j][1] = v.imag();
  }
  fftw_plan plan = fftw_plan_dft_1d(nodes, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  std::vector<cplx> c(n + 1);
  for (int k = 0; k <= n; ++k) {
    c[k] = cplx(buf[k][0], buf[k][1]) * (k == 0 ? 1.0 : 2.0) / static_cast<double>(nodes);
  }
  fftw_free(buf);
  return ChebyshevSeries(std::move(c), Parity::kNone);
}

int trefethen_degree(double big_m, double rho, double eps) {
  if (!(big_m > 0.0) || !(rho > 1.0) || !(eps > 0.0)) {
    throw ValidationError("trefethen_degree: requires M > 0, rho > 1, eps > 0");
  }
  const double n = std::ceil(std::log(2.0 * big_m / ((rho - 1.0) * eps)) / std::log(rho));
  return n <= 0.0 ? 0 : static_cast<int>(n);
}

double trefethen_bound(double big_m, double rho, int n) {
  return 2.0 * big_m * std::pow(rho, -n) / (rho - 1.0);
}

double log_carlini_bound(int n, double t) {
  if (t == 0.0) throw DomainError("carlini_bound: t = 0 (use I_n(0) directly)");
  if (n < 1) throw DomainError("carlini_bound: requires n >= 1");
  const double a = std::abs(t);
  const double r = std::hypot(static_cast<double>(n), a);
  // sqrt(u^2 + 1) - u = exp(-asinh(u)) for u = n/|t|.
  return r - n * std::asinh(n / a) - std::log(2.0) - 0.5 * std::log(r);
}

double carlini_bound(int n, double t) { return std::exp(log_carlini_bound(n, t)); }

double solve_r(double big_t, double eps) {
  if (!(eps > 0.0) || eps > 1.0) throw DomainError("solve_r: eps must lie in (0, 1]");
  if (big_t <= 0.0) return 0.0;
  const double target = std::log(eps);
  auto g = [&](double r) { return r * std::log(big_t / r) - target; };
  double lo = big_t;  // g(lo) = -log eps >= 0
  double hi = 2.0 * big_t + 1.0;
  while (g(hi) > 0.0) hi *= 2.0;
  double r = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double gr = g(r);
    if (gr > 0.0) lo = r; else hi = r;
    const double dg = std::log(big_t / r) - 1.0;
    double next = r - gr / dg;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - r) <= 1e-14 * r) return next;
    r = next;
  }
  return r;
}

int exp_truncation_degree(double t, double eps) {
  if (!(eps > 0.0)) throw ValidationError("exp_truncation_degree: eps must be > 0");
  const double a = std::abs(t);
  if (a == 0.0) return 0;
  if (std::log(eps) >= a) return 0;
  if (eps <= 1.0) return static_cast<int>(std::ceil(solve_r(3.0 * a, eps)));
  const int base = static_cast<int>(std::ceil(3.0 * a));  // the eps = 1 choice
  if (eps <= 2.0) return base;
  const double delta = (eps - 1.0) / 5.0;
  const double n2 = std::ceil(std::sqrt(100.0 * a * (a + std::log(1.0 / delta))));
  return std::min(base, static_cast<int>(n2));
}

int exp_regime(double t, double eps) {
  const double a = std::abs(t);
  const double le = std::log(eps);
  if (le >= a) return 1;
  if (eps >= 1.0) return 2;
  if (le >= -a) return 3;
  return 4;
}

double exp_regime_formula(double t, double eps) {
  const double a = std::abs(t);
  switch (exp_regime(t, eps)) {
    case 1:
      return 0.0;
    case 2:
      return std::sqrt(a * (a - std::log(eps)));
    default: {
      const double l = -std::log(eps);
      return a + (a > 0.0 ? l / std::log(std::numbers::e + l / a) : l);
    }
  }
}

double measure_sup(const std::function<double(double)>& g, double lo, double hi,
                   int points, int refine) {
  if (hi < lo) std::swap(lo, hi);
  if (hi == lo || points < 2) return g(lo);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  std::vector<double> xs(points), vs(points);
  for (int j = 0; j < points; ++j) {
    xs[j] = j == 0 ? hi : j == points - 1 ? lo : mid + half * std::cos(kPi * j / (points - 1));
    vs[j] = g(xs[j]);
  }
  double best = *std::max_element(vs.begin(), vs.end());
  std::vector<int> idx(points);
  std::iota(idx.begin(), idx.end(), 0);
  const int top = std::min(refine, points);
  std::partial_sort(idx.begin(), idx.begin() + top, idx.end(),
                    [&](int a, int b) { return vs[a] > vs[b]; });
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int r = 0; r < top; ++r) {
    const int j = idx[r];
    // xs is decreasing in j.
    double a = xs[std::min(j + 1, points - 1)];
    double b = xs[std::max(j - 1, 0)];
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double gc = g(c), gd = g(d);
    for (int it = 0; it < 40; ++it) {
      if (gc > gd) {
        b = d; d = c; gd = gc;
        c = b - invphi * (b - a);
        gc = g(c);
      } else {
        a = c; c = d; gc = gd;
        d = a + invphi * (b - a);
        gd = g(d);
      }
    }
    best = std::max({best, gc, gd});
  }
  return best;
}

}  // namespace qsvtkit
