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

#include <functional>

#include "qsvtkit/chebyshev.hpp"
#include "qsvtkit/matrix.hpp"
#include "qsvtkit/qsp.hpp"

namespace qsvtkit {

/// A unitary U with orthonormal column blocks B_L1 (d x r) and B_R1
/// (d x c) such that B_L1^dagger U B_R1 = A.
struct BlockEncoding {
  ComplexMatrix u;
  ComplexMatrix bl1;
  ComplexMatrix br1;

  /// B_L1^dagger U B_R1.
  ComplexMatrix encoded() const;
  /// B_L1 B_L1^dagger.
  ComplexMatrix pi_left() const;
  /// B_R1 B_R1^dagger.
  ComplexMatrix pi_right() const;
  /// Throws ValidationError unless u is unitary and both bases have
  /// orthonormal columns of matching height.
  void validate(const Tolerance& tol = {}) const;
};

/// Unitary dilation [[A, sqrt(I - A A^dagger)], [sqrt(I - A^dagger A), -A^dagger]]
/// with B_L1, B_R1 the first r and c computational basis vectors. The
/// square roots come from an SVD of A. Throws NormError when
/// ||A||_op > 1 + 1e-10.
BlockEncoding block_encode(const ComplexMatrix& a);

/// Block encoding of the top-left r1 x c1 block of a unitary in the
/// computational basis. Throws ValidationError on non-unitary input.
BlockEncoding computational_encoding(const ComplexMatrix& u, std::size_t r1,
                                     std::size_t c1, const Tolerance& tol = {});

/// e^{i phi (2 Pi - I)} for an orthogonal projection Pi.
ComplexMatrix projector_phase(const ComplexMatrix& pi, double phi);

/// Phased alternating sequence U_Phi: projector phases interleaved with U
/// and U^dagger, read right to left starting from e^{i phi_n (2 Pi_R - I)}.
/// For odd n the leftmost phase uses Pi_L; for even n the sequence returns
/// to the input space and the leftmost phase uses Pi_R.
ComplexMatrix phased_alternating(const BlockEncoding& be, const PhaseSequence& phi);

/// Singular value transform f^(SV)(A). Odd: sum_i f(s_i) u_i v_i^dagger over
/// the min(r, c) singular triples. Even: sum over all c right singular
/// vectors of f(s_i) v_i v_i^dagger with s_i = 0 past min(r, c). Throws
/// ValidationError for Parity::kNone.
ComplexMatrix sv_transform(const ComplexMatrix& a,
                           const std::function<cplx(double)>& f, Parity parity);

struct QsvtReport {
  double residual = 0.0;
  Parity parity = Parity::kEven;
  int degree = 0;
};

/// Max-norm distance between Pi U_Phi Pi' and the embedded p^(SV)(A), where
/// p is the QSP polynomial of phi, (Pi, Pi') = (Pi_L, Pi_R) for odd degree
/// and (Pi_R, Pi_R) for even degree.
QsvtReport verify_qsvt(const BlockEncoding& be, const PhaseSequence& phi);

/// Embeds an r x c (odd) or c x c (even) matrix into the ambient space of
/// the encoding: B_L1 M B_R1^dagger or B_R1 M B_R1^dagger.
ComplexMatrix embed_block(const BlockEncoding& be, const ComplexMatrix& m,
                          Parity parity);

/// (H (x) I)(|0><0| (x) U_Phi + |1><1| (x) U_{-Phi})(H (x) I) with bases
/// |0> (x) B_L1 and |0> (x) B_R1 for odd degree, |0> (x) B_R1 on both sides
/// for even degree. Its encoded block is Re(p)^(SV)(A) (the average of
/// p^(SV) and (p*)^(SV)).
BlockEncoding real_part_encoding(const BlockEncoding& be, const PhaseSequence& phi);

}  // namespace qsvtkit
