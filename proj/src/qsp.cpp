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
#include "qsvtkit/qsp.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "qsp_strip.hpp"
#include "qsvtkit/errors.hpp"

namespace qsvtkit {

namespace {

constexpr cplx kI(0.0, 1.0);

// Index of the last coefficient with |c| > tol; -1 for the zero series.
int effective_degree(const ChebyshevSeries& s, double tol) {
  for (std::size_t k = s.coeffs.size(); k-- > 0;) {
    if (std::abs(s.coeffs[k]) > tol) return static_cast<int>(k);
  }
  return -1;
}

Parity parity_of_degree(int n) { return n % 2 == 0 ? Parity::kEven : Parity::kOdd; }

ChebyshevSeries resized(ChebyshevSeries s, int len, Parity parity) {
  s.coeffs.resize(std::max(len, 1), 0.0);
  s.parity = parity;
  const std::size_t start = parity == Parity::kEven ? 1 : 0;
  if (parity != Parity::kNone) {
    for (std::size_t k = start; k < s.coeffs.size(); k += 2) s.coeffs[k] = 0.0;
  }
  return s;
}

// |p|^2 + (1 - x^2)|q|^2 on the real line.
ChebyshevSeries norm_polynomial(const ChebyshevSeries& p, const ChebyshevSeries& q) {
  ChebyshevSeries out = p * conj(p) + mul_one_minus_x2(q * conj(q));
  out.parity = Parity::kEven;
  return out;
}

double l1(const ChebyshevSeries& s) {
  double t = 0.0;
  for (const auto& c : s.coeffs) t += std::abs(c);
  return t;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// A pair (A, B) of real polynomials standing for A^2 + (1 - x^2) B^2.
struct Factor {
  ChebyshevSeries a;
  ChebyshevSeries b;
};

ChebyshevSeries real_series(std::vector<double> c) {
  std::vector<cplx> z(c.begin(), c.end());
  return ChebyshevSeries(std::move(z));
}

// |A1 + i s B1| |A2 + i s B2| = |(A1 A2 - s^2 B1 B2) + i s (A1 B2 + A2 B1)|.
Factor multiply(const Factor& f, const Factor& g) {
  return Factor{f.a * g.a - mul_one_minus_x2(f.b * g.b), f.a * g.b + g.a * f.b};
}

ChebyshevSeries represented(const Factor& f) {
  return f.a * f.a + mul_one_minus_x2(f.b * f.b);
}

// Roots of sum_k c_k T_k(u) from the eigenvalues of the colleague matrix.
std::vector<cplx> chebyshev_roots(const std::vector<double>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return {};
  if (d == 1) return {cplx(-c[0] / c[1], 0.0)};
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  m(0, 1) = 1.0;
  for (int i = 1; i < d - 1; ++i) {
    m(i, i - 1) = 0.5;
    m(i, i + 1) = 0.5;
  }
  for (int j = 0; j < d; ++j) m(d - 1, j) -= c[j] / (2.0 * c[d]);
  m(d - 1, d - 2) += 0.5;
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
  if (es.info() != Eigen::Success) {
    throw ConvergenceError("complete_real: root finding did not converge", 0.0);
  }
  std::vector<cplx> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()[i];
  return roots;
}

}  // namespace

void PhaseSequence::validate() const {
  if (phases.empty()) throw ValidationError("phase sequence must contain at least one phase");
  for (std::size_t k = 0; k < phases.size(); ++k) {
    if (!std::isfinite(phases[k])) {
      throw ValidationError("phase " + std::to_string(k) + " is not finite");
    }
  }
}

PhaseSequence PhaseSequence::negated() const {
  PhaseSequence out = *this;
  for (auto& v : out.phases) v = -v;
  return out;
}

ComplexMatrix qsp_reflection(double x) {
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  return ComplexMatrix{{x, s}, {s, -x}};
}

ComplexMatrix qsp_eval(const PhaseSequence& phi, double x) {
  phi.validate();
  if (!(std::abs(x) <= 1.0)) {
    throw DomainError("qsp_eval: |x| = " + fmt_double(std::abs(x)) + " exceeds 1");
  }
  auto rz = [](double a) {
    return ComplexMatrix{{std::exp(kI * a), 0.0}, {0.0, std::exp(-kI * a)}};
  };
  const ComplexMatrix r = qsp_reflection(x);
  ComplexMatrix u = rz(phi.phases[0]);
  for (std::size_t j = 1; j < phi.phases.size(); ++j) u = u * r * rz(phi.phases[j]);
  return u;
}

QspPair qsp_polynomials(const PhaseSequence& phi) {
  phi.validate();
  const int n = phi.degree();
  ChebyshevSeries p({std::exp(kI * phi.phases[n])}, Parity::kEven);
  ChebyshevSeries q({0.0}, Parity::kOdd);
  for (int k = n - 1; k >= 0; --k) {
    const int m = n - k;  // degree of p_k
    const cplx e = std::exp(kI * phi.phases[k]);
    ChebyshevSeries pk = e * (mul_x(p) + mul_one_minus_x2(q));
    ChebyshevSeries qk = std::conj(e) * (p - mul_x(q));
    p = resized(std::move(pk), m + 1, parity_of_degree(m));
    q = resized(std::move(qk), m, parity_of_degree(m + 1));
  }
  return QspPair{p, q};
}

AchievableReport achievable_check(const QspPair& pair, double tol, double coeff_tol) {
  AchievableReport rep;
  const int dp = effective_degree(pair.p, coeff_tol);
  // The leading Chebyshev coefficient of q is twice that of p in an
  // achievable pair, so q gets a proportionally looser zero threshold.
  const int dq = effective_degree(pair.q, 4.0 * coeff_tol);
  rep.degree_ok = dq == -1 || dq <= dp - 1;
  const Parity pp = detect_parity(pair.p.coeffs, coeff_tol);
  const Parity pq = detect_parity(pair.q.coeffs, 4.0 * coeff_tol);
  rep.parity_ok = pp != Parity::kNone && (dq == -1 || (pq != Parity::kNone && pq != pp));
  ChebyshevSeries defect = norm_polynomial(pair.p, pair.q);
  defect.coeffs[0] -= 1.0;
  rep.residual = l1(defect);
  rep.ok = rep.degree_ok && rep.parity_ok && rep.residual <= tol;
  std::ostringstream os;
  if (!rep.degree_ok) os << "degree condition fails (deg p = " << dp << ", deg q = " << dq << "); ";
  if (!rep.parity_ok) {
    os << "parity condition fails (p " << parity_name(pp) << ", q " << parity_name(pq) << "); ";
  }
  if (rep.residual > tol) {
    os << "|p|^2 + (1-x^2)|q|^2 - 1 has coefficient l1 norm " << fmt_double(rep.residual);
  }
  rep.detail = os.str();
  return rep;
}

namespace {

// Largest coefficientwise distance between two pairs.
double pair_distance(const QspPair& a, const QspPair& b) {
  auto dist = [](const ChebyshevSeries& x, const ChebyshevSeries& y) {
    const std::size_t len = std::max(x.coeffs.size(), y.coeffs.size());
    double d = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
      const cplx u = k < x.coeffs.size() ? x.coeffs[k] : cplx(0.0, 0.0);
      const cplx v = k < y.coeffs.size() ? y.coeffs[k] : cplx(0.0, 0.0);
      d = std::max(d, std::abs(u - v));
    }
    return d;
  };
  return std::max(dist(a.p, b.p), dist(a.q, b.q));
}

std::vector<double> strip_layers(ChebyshevSeries p, ChebyshevSeries q, int n) {
  std::vector<double> phases;
  phases.reserve(n + 1);
  for (int m = n; m >= 1; --m) {
    // e^{2 i phi} is the ratio of the leading coefficients of p and q; taking
    // the argument of p_m conj(q_{m-1}) weighs both of them.
    const double phi = 0.5 * std::arg(p.coeffs[m] * std::conj(q.coeffs[m - 1]));
    phases.push_back(phi);
    const cplx e = std::exp(-kI * phi);
    ChebyshevSeries pn = mul_x(e * p) + mul_one_minus_x2(std::conj(e) * q);
    ChebyshevSeries qn = e * p - mul_x(std::conj(e) * q);
    p = resized(std::move(pn), m, parity_of_degree(m - 1));
    q = resized(std::move(qn), m - 1, parity_of_degree(m));
    if ((n - m + 1) % 8 == 0) {
      const double c0 = norm_polynomial(p, q).coeffs[0].real();
      if (c0 > 0.0) {
        const double s = 1.0 / std::sqrt(c0);
        p = s * p;
        q = s * q;
      }
    }
  }
  phases.push_back(std::arg(p.coeffs[0]));
  return phases;
}

}  // namespace

PhaseSequence synthesize_phases(const QspPair& pair, double tol) {
  const AchievableReport rep = achievable_check(pair, tol);
  if (!rep.ok) throw NotAchievableError("synthesize_phases: " + rep.detail, rep.residual);
  const int n = std::max(effective_degree(pair.p, 0.0), 0);
  if (n > kMaxSynthesisDegree) {
    throw ValidationError("synthesize_phases: degree " + std::to_string(n) +
                          " exceeds the supported maximum " +
                          std::to_string(kMaxSynthesisDegree));
  }
  const QspPair target{resized(pair.p, n + 1, parity_of_degree(n)),
                       resized(pair.q, n, parity_of_degree(n + 1))};
  std::vector<double> phases = strip_layers(target.p, target.q, n);
  double best = pair_distance(qsp_polynomials(PhaseSequence(phases)), target);
  // Stripping divides by the leading coefficients, which can be
  // exponentially small in n, and then amplifies the rounding in the pair.
  // Retry in extended precision after projecting the pair back onto
  // |p|^2 + (1-x^2)|q|^2 = 1.
  const int first = detail::strip_tier_for_degree(n);
  const int last = std::min(first + 1, detail::strip_tier_count() - 1);
  for (int tier = first; tier <= last && best > 1e-2 * tol; ++tier) {
    std::vector<double> trial =
        detail::strip_layers_extended(target.p.coeffs, target.q.coeffs, n, tier);
    const double err = pair_distance(qsp_polynomials(PhaseSequence(trial)), target);
    if (err < best) {
      best = err;
      phases = std::move(trial);
    }
  }
  return PhaseSequence(std::move(phases));
}

QspPair complete_real(const ChebyshevSeries& p_re, const ChebyshevSeries& q_re) {
  auto real_part = [](const ChebyshevSeries& s, const char* name) {
    double scale = 0.0;
    for (const auto& c : s.coeffs) scale = std::max(scale, std::abs(c));
    for (const auto& c : s.coeffs) {
      if (std::abs(c.imag()) > 1e-12 * std::max(1.0, scale)) {
        throw ValidationError(std::string("complete_real: ") + name + " has complex coefficients");
      }
    }
    ChebyshevSeries out = s;
    for (auto& c : out.coeffs) c = c.real();
    if (out.coeffs.empty()) out.coeffs.assign(1, 0.0);
    return out;
  };
  const ChebyshevSeries pr = real_part(p_re, "p_re");
  const ChebyshevSeries qr = real_part(q_re, "q_re");
  const int n = std::max(effective_degree(pr, 1e-14), 0);
  const int dq = effective_degree(qr, 1e-14);
  if (dq != -1 && dq > n - 1) {
    throw NotAchievableError("complete_real: deg q_re = " + std::to_string(dq) +
                                 " must be at most deg p_re - 1 = " + std::to_string(n - 1),
                             0.0);
  }
  const Parity pp = detect_parity(pr.coeffs, 1e-14);
  const Parity pq = detect_parity(qr.coeffs, 1e-14);
  if (pp == Parity::kNone || (dq != -1 && (pq == Parity::kNone || pq == pp))) {
    throw NotAchievableError("complete_real: p_re and q_re must have definite, opposite parities",
                             0.0);
  }
  const Parity p_parity = parity_of_degree(n);
  const Parity q_parity = parity_of_degree(n + 1);

  // Condition (c'): p_re^2 + (1-x^2) q_re^2 <= 1 on a Chebyshev grid.
  const int grid = 10 * std::max(n, 1);
  for (double x : chebyshev_points(grid)) {
    const double v = std::norm(pr(x)) + (1.0 - x * x) * std::norm(qr(x));
    if (v > 1.0 + 1e-10) {
      throw NotAchievableError("complete_real: p_re^2 + (1-x^2) q_re^2 = " + fmt_double(v) +
                                   " > 1 at x = " + fmt_double(x),
                               v - 1.0);
    }
  }

  ChebyshevSeries big_p = (-1.0) * (pr * pr + mul_one_minus_x2(qr * qr));
  big_p.coeffs[0] += 1.0;
  double pmax = 0.0;
  for (const auto& c : big_p.coeffs) pmax = std::max(pmax, std::abs(c));

  Factor acc{real_series({1.0}), real_series({0.0})};
  Parity acc_parity = Parity::kEven;
  if (pmax > 1e-14) {
    // P is even: P(x) = sum_k c_{2k} T_k(2x^2 - 1), a polynomial in w = x^2.
    std::vector<double> cu;
    for (std::size_t k = 0; k < big_p.coeffs.size(); k += 2) cu.push_back(big_p.coeffs[k].real());
    while (cu.size() > 1 && std::abs(cu.back()) <= 1e-13 * pmax) cu.pop_back();
    const std::vector<cplx> u_roots = chebyshev_roots(cu);

    constexpr double kSnap = 1e-6;
    constexpr double kPair = 1e-5;
    std::vector<double> inside;
    auto toggle = [&](Parity p) {
      if (p == Parity::kOdd) acc_parity = acc_parity == Parity::kEven ? Parity::kOdd : Parity::kEven;
    };
    for (const cplx& u : u_roots) {
      const cplx w = 0.5 * (u + 1.0);
      const bool is_real = std::abs(w.imag()) <= 1e-14 * std::max(1.0, std::abs(w));
      if (!is_real) {
        if (w.imag() < 0.0) continue;  // represented by its conjugate
        const double r = std::abs(w);
        const double c = r + std::abs(w - 1.0);
        acc = multiply(acc, Factor{real_series({c * 0.5 - r, 0.0, c * 0.5}),
                                   real_series({0.0, std::sqrt(std::max(c * c - 1.0, 0.0))})});
        continue;
      }
      const double wr = w.real();
      if (std::abs(wr) <= kSnap) {
        acc = multiply(acc, Factor{real_series({0.0, 1.0}), real_series({0.0})});
        toggle(Parity::kOdd);
      } else if (std::abs(wr - 1.0) <= kSnap) {
        acc = multiply(acc, Factor{real_series({0.0}), real_series({1.0})});
        toggle(Parity::kOdd);
      } else if (wr > 1.0) {
        acc = multiply(acc, Factor{real_series({0.0, std::sqrt(wr - 1.0)}),
                                   real_series({std::sqrt(wr)})});
        toggle(Parity::kOdd);
      } else if (wr < 0.0) {
        acc = multiply(acc, Factor{real_series({0.0, std::sqrt(1.0 - wr)}),
                                   real_series({std::sqrt(-wr)})});
        toggle(Parity::kOdd);
      } else {
        inside.push_back(wr);
      }
    }
    std::sort(inside.begin(), inside.end());
    for (std::size_t i = 0; i < inside.size(); i += 2) {
      if (i + 1 >= inside.size() || inside[i + 1] - inside[i] > kPair) {
        const double x0 = std::sqrt(inside[i]);
        throw NotAchievableError(
            "complete_real: 1 - p_re^2 - (1-x^2) q_re^2 changes sign near x = " + fmt_double(x0),
            0.0);
      }
      const double w0 = 0.5 * (inside[i] + inside[i + 1]);
      // (x^2 - w0) = (T_2 + 1)/2 - w0
      acc = multiply(acc, Factor{real_series({0.5 - w0, 0.0, 0.5}), real_series({0.0})});
    }
  } else {
    acc = Factor{real_series({0.0}), real_series({0.0})};
  }

  if (pmax > 1e-14) {
    if (acc_parity != p_parity) {
      acc = multiply(acc, Factor{real_series({0.0, 1.0}), real_series({1.0})});
    }
    const ChebyshevSeries f = represented(acc);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
      const double fk = f.coeffs[k].real();
      const double pk = k < big_p.coeffs.size() ? big_p.coeffs[k].real() : 0.0;
      num += pk * fk;
      den += fk * fk;
    }
    const double kfit = den > 0.0 ? num / den : 0.0;
    if (!(kfit > 0.0)) {
      throw NotAchievableError("complete_real: 1 - p_re^2 - (1-x^2) q_re^2 is not nonnegative",
                               0.0);
    }
    const double s = std::sqrt(kfit);
    acc.a = s * acc.a;
    acc.b = s * acc.b;
  }

  QspPair out;
  out.p = resized(pr + kI * acc.a, n + 1, p_parity);
  out.q = resized(qr + kI * acc.b, std::max(n, 1), q_parity);
  const AchievableReport rep = achievable_check(out, 1e-6);
  if (!rep.ok) throw NotAchievableError("complete_real: " + rep.detail, rep.residual);
  return out;
}

}  // namespace qsvtkit
