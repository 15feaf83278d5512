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

#include "qsvtkit/csd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qsvtkit/errors.hpp"
#include "qsvtkit/linalg.hpp"

namespace qsvtkit {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

ComplexMatrix reversed_columns(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    out.set_block(0, m.cols() - 1 - j, m.column(j));
  return out;
}

void require_orthonormal_columns(const ComplexMatrix& x, const char* name,
                                 double tol) {
  const double r =
      max_abs_diff(x.adjoint() * x, ComplexMatrix::identity(x.cols()));
  if (!(r <= tol)) {
    throw ValidationError(std::string("principal_angles: columns of ") + name +
                          " are not orthonormal, max|X^dagger X - I| = " +
                          fmt(r));
  }
}

// Orthonormal basis (columns) of the range of an orthogonal projection.
ComplexMatrix range_basis(const ComplexMatrix& p) {
  const SvdResult s = svd(p);
  std::size_t rank = 0;
  while (rank < s.sigma.size() && s.sigma[rank] > 0.5) ++rank;
  return s.v.columns(0, rank);
}

double column_norm(const ComplexMatrix& v) { return v.frobenius_norm(); }

}  // namespace

CSDecomposition cs_decompose(const ComplexMatrix& u, std::size_t r1,
                             std::size_t c1, const Tolerance& tol) {
  tol.validate();
  if (!u.is_square()) {
    throw ValidationError("cs_decompose: matrix is " + std::to_string(u.rows()) +
                          "x" + std::to_string(u.cols()) + ", not square");
  }
  if (!u.all_finite()) throw ValidationError("cs_decompose: non-finite entries");
  const double ures = unitarity_residual(u);
  if (!(ures <= tol.unitarity_tol)) {
    throw ValidationError("cs_decompose: input is not unitary, max|U^dagger U - I| = " +
                          fmt(ures));
  }
  const std::size_t n = u.rows();
  if (r1 > n || c1 > n) {
    throw ValidationError("cs_decompose: block sizes r1=" + std::to_string(r1) +
                          ", c1=" + std::to_string(c1) + " exceed dimension " +
                          std::to_string(n));
  }
  CSDecomposition out;
  if (r1 == 0 || c1 == 0) {
    out.d = u;
    return out;
  }
  const std::size_t r2 = n - r1;
  const std::size_t c2 = n - c1;

  const SvdResult s11 = svd(u.block(0, 0, r1, c1));
  out.v1 = reversed_columns(s11.v);
  out.w1 = reversed_columns(s11.w);

  CSStructure& st = out.structure;
  const std::size_t k = s11.sigma.size();
  for (std::size_t t = 0; t < k; ++t) {
    const double sg = s11.sigma[t];
    if (sg >= 1.0 - tol.sv_cluster_tol) {
      ++st.n_one;
    } else if (sg > tol.sv_cluster_tol) {
      ++st.n_mid;
    } else {
      ++st.n_zero;
    }
  }
  for (std::size_t t = st.n_one + st.n_mid; t > st.n_one; --t) {
    const double c = std::clamp(s11.sigma[t - 1], 0.0, 1.0);
    st.cos_values.push_back(c);
    st.sin_values.push_back(std::sqrt((1.0 - c) * (1.0 + c)));
  }

  out.v2 = qr_full(u.block(r1, 0, r2, c1) * out.w1).q;
  out.w2 = qr_full(u.block(0, c1, r1, c2).adjoint() * out.v1).q;

  // Rotate the trailing block of D22 to -I.
  const std::size_t z_c = c1 - st.n_mid - st.n_one;
  const std::size_t z_r = r1 - st.n_mid - st.n_one;
  const std::size_t row0 = z_c + st.n_mid;
  const std::size_t col0 = z_r + st.n_mid;
  if (row0 < r2 && col0 < c2 && r2 - row0 == c2 - col0) {
    const std::size_t t = r2 - row0;
    const ComplexMatrix v2t = out.v2.columns(row0, t);
    const ComplexMatrix w2t = out.w2.columns(col0, t);
    const ComplexMatrix q = v2t.adjoint() * u.block(r1, c1, r2, c2) * w2t;
    const ComplexMatrix fix = cplx(-1.0, 0.0) * unitary_polar_factor(q).adjoint();
    out.w2.set_block(0, col0, w2t * fix);
  }

  out.d = blockdiag(out.v1, out.v2).adjoint() * u * blockdiag(out.w1, out.w2);
  return out;
}

std::vector<double> principal_angles(const ComplexMatrix& x,
                                     const ComplexMatrix& y,
                                     const Tolerance& tol) {
  if (x.rows() != y.rows()) {
    throw ValidationError("principal_angles: row counts " +
                          std::to_string(x.rows()) + " and " +
                          std::to_string(y.rows()) + " differ");
  }
  require_orthonormal_columns(x, "X", tol.unitarity_tol);
  require_orthonormal_columns(y, "Y", tol.unitarity_tol);
  std::vector<double> angles;
  if (x.cols() == 0 || y.cols() == 0) return angles;
  const ComplexMatrix xy = x.adjoint() * y;
  const SvdResult s = svd(xy);
  // atan2(sin, cos) keeps small angles accurate where acos loses half the digits.
  for (std::size_t i = 0; i < s.sigma.size(); ++i) {
    const ComplexMatrix yw = y * s.w.column(i);
    const double sine = (yw - x * (xy * s.w.column(i))).frobenius_norm();
    angles.push_back(std::atan2(sine, s.sigma[i]));
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

JordanBlocks jordan_decompose(const ComplexMatrix& px, const ComplexMatrix& py,
                              const Tolerance& tol) {
  tol.validate();
  if (!px.is_square() || !py.is_square() || px.rows() != py.rows()) {
    throw ValidationError("jordan_decompose: projections must be square and of equal size");
  }
  for (const auto* p : {&px, &py}) {
    if (!p->all_finite()) throw ValidationError("jordan_decompose: non-finite entries");
    const double r = projection_residual(*p);
    if (!(r <= tol.residual_tol)) {
      throw ValidationError(
          "jordan_decompose: input is not an orthogonal projection, "
          "max|P^2 - P| + max|P - P^dagger| = " + fmt(r));
    }
  }
  const std::size_t n = px.rows();
  const ComplexMatrix xb = range_basis(px);
  const ComplexMatrix yb = range_basis(py);

  std::vector<ComplexMatrix> cols;
  JordanBlocks out;
  auto push = [&](const ComplexMatrix& v) {
    cols.push_back(v);
    return cols.size() - 1;
  };

  ComplexMatrix xs = xb;
  ComplexMatrix ys = yb;
  std::vector<double> sigma;
  if (xb.cols() > 0 && yb.cols() > 0) {
    const SvdResult s = svd(xb.adjoint() * yb);
    xs = xb * s.v;
    ys = yb * s.w;
    sigma = s.sigma;
  }
  const std::size_t k = sigma.size();
  for (std::size_t i = 0; i < k; ++i) {
    const ComplexMatrix xi = xs.column(i);
    ComplexMatrix rest = ys.column(i) - cplx(sigma[i], 0.0) * xi;
    const double sn = column_norm(rest);
    if (sn <= tol.sv_cluster_tol) {
      out.partition.push_back({push(xi)});
      continue;
    }
    rest *= cplx(1.0 / sn, 0.0);
    const std::size_t a = push(xi);
    const std::size_t b = push(rest);
    if (sigma[i] <= tol.sv_cluster_tol) {
      out.partition.push_back({a});
      out.partition.push_back({b});
    } else {
      out.partition.push_back({a, b});
    }
  }
  for (std::size_t i = k; i < xs.cols(); ++i) out.partition.push_back({push(xs.column(i))});
  for (std::size_t i = k; i < ys.cols(); ++i) out.partition.push_back({push(ys.column(i))});

  ComplexMatrix partial(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) partial.set_block(0, j, cols[j]);
  out.basis = complete_to_unitary(partial);
  for (std::size_t j = cols.size(); j < n; ++j) out.partition.push_back({j});
  return out;
}

double block_offdiagonal_residual(const ComplexMatrix& p,
                                  const JordanBlocks& blocks) {
  const ComplexMatrix m = blocks.basis.adjoint() * p * blocks.basis;
  std::vector<std::size_t> owner(m.rows(), 0);
  for (std::size_t b = 0; b < blocks.partition.size(); ++b)
    for (std::size_t i : blocks.partition[b]) owner.at(i) = b;
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (owner[i] != owner[j]) r = std::max(r, std::abs(m(i, j)));
  return r;
}

}  // namespace qsvtkit
