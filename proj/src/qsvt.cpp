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

#include "qsvtkit/qsvt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qsvtkit/errors.hpp"
#include "qsvtkit/linalg.hpp"

namespace qsvtkit {

namespace {

constexpr double kNormSlack = 1e-10;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double orthonormality_residual(const ComplexMatrix& b) {
  return max_abs_diff(b.adjoint() * b, ComplexMatrix::identity(b.cols()));
}

// Hermitian V diag(values) V^dagger.
ComplexMatrix spectral(const ComplexMatrix& v, const std::vector<double>& values) {
  ComplexMatrix scaled = v;
  for (std::size_t j = 0; j < v.cols(); ++j)
    for (std::size_t i = 0; i < v.rows(); ++i) scaled(i, j) *= values[j];
  return scaled * v.adjoint();
}

Parity parity_of(int n) { return n % 2 == 0 ? Parity::kEven : Parity::kOdd; }

}  // namespace

ComplexMatrix BlockEncoding::encoded() const { return bl1.adjoint() * u * br1; }
ComplexMatrix BlockEncoding::pi_left() const { return bl1 * bl1.adjoint(); }
ComplexMatrix BlockEncoding::pi_right() const { return br1 * br1.adjoint(); }

void BlockEncoding::validate(const Tolerance& tol) const {
  if (!u.is_square()) throw ValidationError("block encoding: U is not square");
  if (bl1.rows() != u.rows() || br1.rows() != u.rows()) {
    throw ValidationError("block encoding: basis height differs from dimension " +
                          std::to_string(u.rows()));
  }
  const double ur = unitarity_residual(u);
  if (!(ur <= tol.unitarity_tol)) {
    throw ValidationError("block encoding: U is not unitary, max|U^dagger U - I| = " +
                          fmt(ur));
  }
  const double lr = orthonormality_residual(bl1);
  const double rr = orthonormality_residual(br1);
  if (!(std::max(lr, rr) <= tol.unitarity_tol)) {
    throw ValidationError("block encoding: basis columns are not orthonormal, residual " +
                          fmt(std::max(lr, rr)));
  }
}

BlockEncoding block_encode(const ComplexMatrix& a) {
  if (!a.all_finite()) throw ValidationError("block_encode: non-finite entries");
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  const std::size_t d = r + c;
  BlockEncoding be;
  be.u = ComplexMatrix(d, d);
  be.bl1 = ComplexMatrix::identity(d).columns(0, r);
  be.br1 = ComplexMatrix::identity(d).columns(0, c);
  if (a.empty()) {
    be.u = ComplexMatrix::identity(d);
    return be;
  }
  const SvdResult s = svd(a);
  const double norm = s.sigma.front();
  if (norm > 1.0 + kNormSlack) {
    throw NormError("block_encode: ||A||_op = " + fmt(norm) + " exceeds 1", norm);
  }
  std::vector<double> left(r, 1.0);
  std::vector<double> right(c, 1.0);
  for (std::size_t i = 0; i < s.sigma.size(); ++i) {
    const double sg = std::min(s.sigma[i], 1.0);
    const double co = std::sqrt((1.0 - sg) * (1.0 + sg));
    left[i] = co;
    right[i] = co;
  }
  be.u.set_block(0, 0, a);
  be.u.set_block(0, c, spectral(s.v, left));
  be.u.set_block(r, 0, spectral(s.w, right));
  be.u.set_block(r, c, cplx(-1.0, 0.0) * a.adjoint());
  return be;
}

BlockEncoding computational_encoding(const ComplexMatrix& u, std::size_t r1,
                                     std::size_t c1, const Tolerance& tol) {
  if (!u.is_square() || r1 > u.rows() || c1 > u.cols()) {
    throw ValidationError("computational_encoding: block " + std::to_string(r1) +
                          "x" + std::to_string(c1) + " does not fit a " +
                          std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                          " unitary");
  }
  BlockEncoding be;
  be.u = u;
  be.bl1 = ComplexMatrix::identity(u.rows()).columns(0, r1);
  be.br1 = ComplexMatrix::identity(u.rows()).columns(0, c1);
  be.validate(tol);
  return be;
}

ComplexMatrix projector_phase(const ComplexMatrix& pi, double phi) {
  const cplx plus = std::polar(1.0, phi);
  const cplx minus = std::conj(plus);
  ComplexMatrix e = (plus - minus) * pi;
  for (std::size_t i = 0; i < e.rows(); ++i) e(i, i) += minus;
  return e;
}

ComplexMatrix phased_alternating(const BlockEncoding& be, const PhaseSequence& phi) {
  phi.validate();
  const int n = phi.degree();
  const ComplexMatrix pl = be.pi_left();
  const ComplexMatrix pr = be.pi_right();
  const ComplexMatrix ud = be.u.adjoint();
  // Phase j acts on the right space when n - j is even.
  auto on_right = [n](int j) { return (n - j) % 2 == 0; };
  ComplexMatrix out = projector_phase(on_right(0) ? pr : pl, phi.phases[0]);
  for (int j = 1; j <= n; ++j) {
    const bool right = on_right(j);
    out = out * (right ? be.u : ud);
    out = out * projector_phase(right ? pr : pl, phi.phases[j]);
  }
  return out;
}

ComplexMatrix sv_transform(const ComplexMatrix& a,
                           const std::function<cplx(double)>& f, Parity parity) {
  if (parity == Parity::kNone) {
    throw ValidationError("sv_transform: parity must be even or odd");
  }
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  if (parity == Parity::kOdd) {
    ComplexMatrix out(r, c);
    if (a.empty()) return out;
    const SvdResult s = svd(a);
    for (std::size_t i = 0; i < s.sigma.size(); ++i) {
      const cplx fi = f(s.sigma[i]);
      for (std::size_t row = 0; row < r; ++row)
        for (std::size_t col = 0; col < c; ++col)
          out(row, col) += fi * s.v(row, i) * std::conj(s.w(col, i));
    }
    return out;
  }
  ComplexMatrix out(c, c);
  if (c == 0) return out;
  ComplexMatrix w = ComplexMatrix::identity(c);
  std::vector<double> sigma(c, 0.0);
  if (r > 0) {
    const SvdResult s = svd(a);
    w = s.w;
    std::copy(s.sigma.begin(), s.sigma.end(), sigma.begin());
  }
  for (std::size_t i = 0; i < c; ++i) {
    const cplx fi = f(sigma[i]);
    for (std::size_t row = 0; row < c; ++row)
      for (std::size_t col = 0; col < c; ++col)
        out(row, col) += fi * w(row, i) * std::conj(w(col, i));
  }
  return out;
}

ComplexMatrix embed_block(const BlockEncoding& be, const ComplexMatrix& m,
                          Parity parity) {
  const ComplexMatrix& left = parity == Parity::kOdd ? be.bl1 : be.br1;
  return left * m * be.br1.adjoint();
}

QsvtReport verify_qsvt(const BlockEncoding& be, const PhaseSequence& phi) {
  phi.validate();
  QsvtReport rep;
  rep.degree = phi.degree();
  rep.parity = parity_of(rep.degree);
  const ChebyshevSeries p = qsp_polynomials(phi).p;
  const ComplexMatrix target = embed_block(
      be, sv_transform(be.encoded(), [&p](double x) { return p(x); }, rep.parity),
      rep.parity);
  const ComplexMatrix left = rep.parity == Parity::kOdd ? be.pi_left() : be.pi_right();
  const ComplexMatrix got = left * phased_alternating(be, phi) * be.pi_right();
  rep.residual = max_abs_diff(got, target);
  return rep;
}

BlockEncoding real_part_encoding(const BlockEncoding& be, const PhaseSequence& phi) {
  const ComplexMatrix plus = phased_alternating(be, phi);
  const ComplexMatrix minus = phased_alternating(be, phi.negated());
  const std::size_t d = be.u.rows();
  const ComplexMatrix avg = cplx(0.5, 0.0) * (plus + minus);
  const ComplexMatrix diff = cplx(0.5, 0.0) * (plus - minus);
  BlockEncoding out;
  out.u = ComplexMatrix(2 * d, 2 * d);
  out.u.set_block(0, 0, avg);
  out.u.set_block(0, d, diff);
  out.u.set_block(d, 0, diff);
  out.u.set_block(d, d, avg);
  const ComplexMatrix& left = phi.degree() % 2 == 1 ? be.bl1 : be.br1;
  out.bl1 = ComplexMatrix(2 * d, left.cols());
  out.bl1.set_block(0, 0, left);
  out.br1 = ComplexMatrix(2 * d, be.br1.cols());
  out.br1.set_block(0, 0, be.br1);
  return out;
}

}  // namespace qsvtkit
