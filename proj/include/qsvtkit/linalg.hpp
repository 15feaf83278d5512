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

#include <cstdint>
#include <vector>

#include "qsvtkit/matrix.hpp"

namespace qsvtkit {

/// A = V diag(sigma) W^dagger with V (rows x rows) and W (cols x cols)
/// unitary and sigma (length min(rows, cols)) sorted descending.
struct SvdResult {
  ComplexMatrix v;
  std::vector<double> sigma;
  ComplexMatrix w;
};

/// Singular value decomposition by one-sided (Hestenes) Jacobi rotations.
///
/// Throws ConvergenceError carrying the largest remaining normalised column
/// inner product if the sweeps do not converge, and ValidationError on
/// non-finite input.
SvdResult svd(const ComplexMatrix& a);

/// Rebuilds V diag(sigma) W^dagger with the shape of the original matrix.
ComplexMatrix svd_reconstruct(const SvdResult& s, std::size_t rows,
                              std::size_t cols);

/// A = Q R with Q square unitary and R upper trapezoidal.
struct QrResult {
  ComplexMatrix q;
  ComplexMatrix r;
};

/// Householder QR of a matrix of any shape. Columns of Q are rephased so
/// that the first min(rows, cols) diagonal entries of R are real and >= 0.
QrResult qr_full(const ComplexMatrix& a);

/// Positive-diagonal QR; requires rows >= cols.
QrResult qr_positive_diag(const ComplexMatrix& a);

/// Closest unitary matrix (polar factor) U V^dagger of a square matrix.
ComplexMatrix unitary_polar_factor(const ComplexMatrix& a);

/// Completes the orthonormal columns of `x` (n x k) to an n x n unitary
/// whose first k columns are `x`.
ComplexMatrix complete_to_unitary(const ComplexMatrix& x);

/// Largest singular value.
double operator_norm(const ComplexMatrix& a);

/// Haar-random unitary from the positive-diagonal QR of a Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

/// Random matrix with operator norm `norm_target` (singular values drawn
/// uniformly in [0, norm_target], the largest pinned to norm_target).
ComplexMatrix random_contraction(std::size_t rows, std::size_t cols,
                                 double norm_target, std::uint64_t seed);

}  // namespace qsvtkit
