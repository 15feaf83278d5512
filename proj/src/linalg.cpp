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

#include "qsvtkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "qsvtkit/errors.hpp"

namespace qsvtkit {

namespace {

using Column = std::vector<cplx>;

constexpr int kMaxSweeps = 80;

double norm2(const Column& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

// <a, b> = sum conj(a_k) b_k
cplx inner(const Column& a, const Column& b) {
  cplx s(0.0, 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

// Two passes of modified Gram-Schmidt of v against `basis`; returns the
// remaining norm.
double orthogonalize(Column& v, const std::vector<Column>& basis) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& u : basis) {
      const cplx c = inner(u, v);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * u[k];
    }
  }
  return std::sqrt(norm2(v));
}

// Appends standard-basis-derived vectors to `basis` until it has n members.
// Each step orthogonalizes the e_k with the largest residual norm, tracked
// as 1 - sum_b |b_k|^2; that norm is at least sqrt((n - |basis|) / n).
void complete_basis(std::vector<Column>& basis, std::size_t n) {
  std::vector<double> residual(n, 1.0);
  for (const auto& b : basis)
    for (std::size_t k = 0; k < n; ++k) residual[k] -= std::norm(b[k]);
  while (basis.size() < n) {
    const std::size_t k = static_cast<std::size_t>(
        std::max_element(residual.begin(), residual.end()) - residual.begin());
    Column e(n, cplx(0.0, 0.0));
    e[k] = 1.0;
    const double nrm = orthogonalize(e, basis);
    for (auto& x : e) x /= nrm;
    for (std::size_t i = 0; i < n; ++i) residual[i] -= std::norm(e[i]);
    basis.push_back(std::move(e));
  }
}

ComplexMatrix from_columns(const std::vector<Column>& cols, std::size_t rows) {
  ComplexMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

SvdResult svd_tall(const ComplexMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Column> g(n, Column(m));
  std::vector<Column> v(n, Column(n, cplx(0.0, 0.0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) g[j][i] = a(i, j);
    v[j][j] = 1.0;
  }
  const double tol =
      std::numeric_limits<double>::epsilon() * std::max(1.0, std::sqrt(double(m)));
  double fro2 = 0.0;
  for (const auto& col : g) fro2 += norm2(col);
  // Columns at roundoff level of ||A||_F count as zero; their residual
  // correlation with large columns cannot be rotated away.
  const double zero_col = std::pow(std::numeric_limits<double>::epsilon(), 2) * fro2;
  double off = 0.0;
  bool converged = n < 2;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = norm2(g[p]);
        const double beta = norm2(g[q]);
        if (alpha <= zero_col || beta <= zero_col) continue;
        const cplx gamma = inner(g[p], g[q]);
        const double ag = std::abs(gamma);
        const double rel = ag / std::sqrt(alpha * beta);
        off = std::max(off, rel);
        if (rel <= tol) continue;
        const double zeta = (beta - alpha) / (2.0 * ag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        const cplx e = std::conj(gamma) / ag;
        for (std::size_t k = 0; k < m; ++k) {
          const cplx gp = g[p][k];
          const cplx gq = e * g[q][k];
          g[p][k] = c * gp - s * gq;
          g[q][k] = s * gp + c * gq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vp = v[p][k];
          const cplx vq = e * v[q][k];
          v[p][k] = c * vp - s * vq;
          v[q][k] = s * vp + c * vq;
        }
      }
    }
    converged = off <= tol;
  }
  if (!converged) {
    throw ConvergenceError("svd: one-sided Jacobi did not converge after " +
                               std::to_string(kMaxSweeps) +
                               " sweeps; off-diagonal residual " +
                               std::to_string(off),
                           off);
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(norm2(g[j]));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  SvdResult out;
  out.sigma.resize(n);
  std::vector<Column> u_cols;
  std::vector<Column> w_cols;
  u_cols.reserve(m);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::size_t j = order[idx];
    out.sigma[idx] = sigma[j];
    w_cols.push_back(v[j]);
  }
  // Left singular vectors: normalised columns, re-orthogonalised so that
  // directions belonging to tiny singular values stay orthonormal.
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::size_t j = order[idx];
    if (sigma[j] == 0.0) break;
    Column u = g[j];
    for (auto& x : u) x /= sigma[j];
    const double nrm = orthogonalize(u, u_cols);
    if (nrm < 0.5) break;
    for (auto& x : u) x /= nrm;
    u_cols.push_back(std::move(u));
  }
  complete_basis(u_cols, m);
  out.v = from_columns(u_cols, m);
  out.w = from_columns(w_cols, n);
  return out;
}

}  // namespace

SvdResult svd(const ComplexMatrix& a) {
  if (!a.all_finite()) throw ValidationError("svd: matrix has non-finite entries");
  if (a.rows() < a.cols()) {
    SvdResult t = svd_tall(a.adjoint());
    return SvdResult{std::move(t.w), std::move(t.sigma), std::move(t.v)};
  }
  return svd_tall(a);
}

ComplexMatrix svd_reconstruct(const SvdResult& s, std::size_t rows,
                              std::size_t cols) {
  ComplexMatrix sig(rows, cols);
  for (std::size_t i = 0; i < s.sigma.size(); ++i) sig(i, i) = s.sigma[i];
  return s.v * sig * s.w.adjoint();
}

QrResult qr_full(const ComplexMatrix& a) {
  if (!a.all_finite()) throw ValidationError("qr: matrix has non-finite entries");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  ComplexMatrix r = a;
  ComplexMatrix q = ComplexMatrix::identity(m);
  const std::size_t steps = std::min(m, n);
  Column v;
  for (std::size_t j = 0; j < steps; ++j) {
    double normx = 0.0;
    for (std::size_t i = j; i < m; ++i) normx += std::norm(r(i, j));
    normx = std::sqrt(normx);
    if (normx == 0.0) continue;
    const cplx x0 = r(j, j);
    const cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0, 0.0);
    const cplx alpha = -phase * normx;
    v.assign(m - j, cplx(0.0, 0.0));
    for (std::size_t i = j; i < m; ++i) v[i - j] = r(i, j);
    v[0] -= alpha;
    const double vn2 = norm2(v);
    if (vn2 == 0.0) continue;
    const double scale = 2.0 / vn2;
    // R <- H R on rows j.., columns j..
    for (std::size_t c = j; c < n; ++c) {
      cplx dot(0.0, 0.0);
      for (std::size_t i = j; i < m; ++i) dot += std::conj(v[i - j]) * r(i, c);
      dot *= scale;
      for (std::size_t i = j; i < m; ++i) r(i, c) -= v[i - j] * dot;
    }
    r(j, j) = alpha;
    for (std::size_t i = j + 1; i < m; ++i) r(i, j) = 0.0;
    // Q <- Q H on columns j..
    for (std::size_t row = 0; row < m; ++row) {
      cplx dot(0.0, 0.0);
      for (std::size_t i = j; i < m; ++i) dot += q(row, i) * v[i - j];
      dot *= scale;
      for (std::size_t i = j; i < m; ++i) q(row, i) -= dot * std::conj(v[i - j]);
    }
  }
  for (std::size_t j = 0; j < steps; ++j) {
    const cplx d = r(j, j);
    const double ad = std::abs(d);
    if (ad == 0.0) continue;
    const cplx ph = d / ad;
    for (std::size_t row = 0; row < m; ++row) q(row, j) *= ph;
    for (std::size_t c = 0; c < n; ++c) r(j, c) *= std::conj(ph);
    r(j, j) = ad;
  }
  return QrResult{std::move(q), std::move(r)};
}

QrResult qr_positive_diag(const ComplexMatrix& a) {
  if (a.rows() < a.cols()) {
    throw ValidationError("qr_positive_diag: requires rows >= cols, got " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  return qr_full(a);
}

ComplexMatrix unitary_polar_factor(const ComplexMatrix& a) {
  if (!a.is_square()) throw ValidationError("unitary_polar_factor: not square");
  if (a.empty()) return a;
  const SvdResult s = svd(a);
  return s.v * s.w.adjoint();
}

ComplexMatrix complete_to_unitary(const ComplexMatrix& x) {
  const std::size_t n = x.rows();
  std::vector<Column> cols;
  for (std::size_t j = 0; j < x.cols(); ++j) {
    Column c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = x(i, j);
    cols.push_back(std::move(c));
  }
  complete_basis(cols, n);
  return from_columns(cols, n);
}

double operator_norm(const ComplexMatrix& a) {
  if (a.empty()) return 0.0;
  const SvdResult s = svd(a);
  return s.sigma.empty() ? 0.0 : s.sigma.front();
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  return qr_full(random_gaussian(n, n, seed)).q;
}

ComplexMatrix random_contraction(std::size_t rows, std::size_t cols,
                                 double norm_target, std::uint64_t seed) {
  const ComplexMatrix u = random_unitary(rows, seed);
  const ComplexMatrix w = random_unitary(cols, seed ^ 0x9e3779b97f4a7c15ULL);
  std::mt19937_64 rng(seed + 17);
  std::uniform_real_distribution<double> unif(0.0, norm_target);
  ComplexMatrix sig(rows, cols);
  const std::size_t k = std::min(rows, cols);
  for (std::size_t i = 0; i < k; ++i) sig(i, i) = i == 0 ? norm_target : unif(rng);
  return u * sig * w.adjoint();
}

}  // namespace qsvtkit
