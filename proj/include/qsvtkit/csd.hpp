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

#include <cstddef>
#include <vector>

#include "qsvtkit/matrix.hpp"

namespace qsvtkit {

/// Counts and values of the three singular-value classes of the top-left
/// block: exact zeros, the open interval (0, 1), and exact ones.
struct CSStructure {
  std::size_t n_zero = 0;
  std::size_t n_mid = 0;
  std::size_t n_one = 0;
  std::vector<double> cos_values;  // ascending
  std::vector<double> sin_values;  // sqrt(1 - cos^2), same order
};

/// blockdiag(v1, v2)^dagger U blockdiag(w1, w2) = d.
///
/// With z_r = r1 - n_mid - n_one and z_c = c1 - n_mid - n_one, d has the
/// layout
///   D11 = diag(0_{z_r x z_c}, C, I)      D12 = [[I_{z_r}, 0, 0], [0, S, 0], [0, 0, 0]]
///   D21 = [[I_{z_c}, 0, 0], [0, S, 0], [0, 0, 0]]   D22 = diag(0, -C, -I)
struct CSDecomposition {
  ComplexMatrix v1;
  ComplexMatrix v2;
  ComplexMatrix w1;
  ComplexMatrix w2;
  ComplexMatrix d;
  CSStructure structure;
};

/// Cosine-sine decomposition of a unitary partitioned as
/// {r1, rows - r1} x {c1, cols - c1}, built from an SVD of U11 and QR
/// factorizations of U21 W1 and U12^dagger V1.
///
/// A singular value of U11 counts as 1 when >= 1 - sv_cluster_tol and as 0
/// when <= sv_cluster_tol. When r1 or c1 is zero the factors are empty and
/// d = U. Throws ValidationError on non-square or non-unitary input (the
/// message carries max|U^dagger U - I|) or out-of-range block sizes.
CSDecomposition cs_decompose(const ComplexMatrix& u, std::size_t r1,
                             std::size_t c1, const Tolerance& tol = {});

/// Principal angles between the column spaces of X and Y, ascending. The
/// cosines are the singular values of X^dagger Y and the sines the norms of
/// (I - X X^dagger) Y w_i for the right singular vectors w_i. Length is
/// min(cols X, cols Y). Throws ValidationError unless both have orthonormal
/// columns and equal row counts.
std::vector<double> principal_angles(const ComplexMatrix& x,
                                     const ComplexMatrix& y,
                                     const Tolerance& tol = {});

/// Simultaneous block diagonalization of two orthogonal projections into
/// 1x1 and 2x2 blocks.
struct JordanBlocks {
  ComplexMatrix basis;                          // unitary; column i is u_i
  std::vector<std::vector<std::size_t>> partition;  // 0-based index sets
};

/// Builds the common invariant subspaces of Px and Py from principal vector
/// pairs. Pairs whose angle lies strictly between the thresholds give a
/// 2-block {x, (y - cos x) / sin}; aligned or orthogonal pairs and the
/// remaining directions become 1-blocks. Throws ValidationError when either
/// input is not an orthogonal projection.
JordanBlocks jordan_decompose(const ComplexMatrix& px, const ComplexMatrix& py,
                              const Tolerance& tol = {});

/// Largest entry of basis^dagger P basis outside the blocks of `partition`.
double block_offdiagonal_residual(const ComplexMatrix& p,
                                  const JordanBlocks& blocks);

}  // namespace qsvtkit
