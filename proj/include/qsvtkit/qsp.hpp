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
#include <vector>

#include "qsvtkit/chebyshev.hpp"
#include "qsvtkit/matrix.hpp"

namespace qsvtkit {

/// Phase factors phi_0..phi_n of a QSP circuit.
struct PhaseSequence {
  std::vector<double> phases;

  PhaseSequence() = default;
  explicit PhaseSequence(std::vector<double> p) : phases(std::move(p)) {}

  /// Polynomial degree n (one less than the number of phases).
  int degree() const { return static_cast<int>(phases.size()) - 1; }
  /// Throws ValidationError when empty or non-finite.
  void validate() const;
  PhaseSequence negated() const;
};

/// Polynomials p, q with U_Phi(x) = [[p, .], [sqrt(1-x^2) q, .]]. Both are
/// stored in the Chebyshev basis.
struct QspPair {
  ChebyshevSeries p;
  ChebyshevSeries q;
};

/// Reflection R(x) = [[x, sqrt(1-x^2)], [sqrt(1-x^2), -x]].
ComplexMatrix qsp_reflection(double x);

/// e^{i phi_0 Z} prod_{j>=1} R(x) e^{i phi_j Z}. Throws DomainError if |x| > 1.
ComplexMatrix qsp_eval(const PhaseSequence& phi, double x);

/// The pair (p, q) realised by phi, from the layer recurrence
/// p_k = e^{i phi_k} (x p_{k+1} + (1-x^2) q_{k+1}),
/// q_k = e^{-i phi_k} (p_{k+1} - x q_{k+1}).
QspPair qsp_polynomials(const PhaseSequence& phi);

struct AchievableReport {
  bool ok = false;
  bool degree_ok = false;
  bool parity_ok = false;
  /// l1 norm of the Chebyshev coefficients of |p|^2 + (1-x^2)|q|^2 - 1,
  /// an upper bound on its sup norm over [-1, 1].
  double residual = 0.0;
  std::string detail;
};

/// Checks deg q <= deg p - 1, opposite parities, and the norm identity.
/// Coefficients with magnitude <= coeff_tol count as zero.
AchievableReport achievable_check(const QspPair& pair, double tol = 1e-10,
                                  double coeff_tol = 1e-12);

/// Layer stripping. Throws NotAchievableError carrying the norm residual if
/// the pair fails achievable_check at `tol`, and ValidationError above
/// degree 512.
PhaseSequence synthesize_phases(const QspPair& pair, double tol = 1e-8);

/// Completes real polynomials (p_re, q_re) with opposite parities and
/// p_re^2 + (1-x^2) q_re^2 <= 1 on [-1, 1] to an achievable pair with those
/// real parts. Throws NotAchievableError naming the grid point where the
/// inequality fails.
QspPair complete_real(const ChebyshevSeries& p_re, const ChebyshevSeries& q_re);

/// Largest supported synthesis degree.
inline constexpr int kMaxSynthesisDegree = 512;

}  // namespace qsvtkit
