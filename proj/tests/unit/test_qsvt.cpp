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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qsvtkit/errors.hpp"
#include "qsvtkit/linalg.hpp"
#include "qsvtkit/qsp.hpp"
#include "qsvtkit/qsvt.hpp"

namespace qsvtkit {
namespace {

const cplx kI(0.0, 1.0);

PhaseSequence random_phases(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> phi(n + 1);
  for (double& p : phi) p = u(rng);
  return PhaseSequence(phi);
}

// Same encoded block, expressed in rotated bases.
BlockEncoding rotate(const BlockEncoding& be, std::uint64_t seed) {
  const std::size_t d = be.u.rows();
  const ComplexMatrix bl = random_unitary(d, seed);
  const ComplexMatrix br = random_unitary(d, seed + 1);
  return BlockEncoding{bl * be.u * br.adjoint(), bl * be.bl1, br * be.br1};
}

TEST(BlockEncode, Scalar) {
  const BlockEncoding be = block_encode(ComplexMatrix{{0.5}});
  const double s = std::sqrt(0.75);
  EXPECT_LE(max_abs_diff(be.u, ComplexMatrix{{0.5, s}, {s, -0.5}}), 1e-15);
}

TEST(BlockEncode, Identity) {
  const BlockEncoding be = block_encode(ComplexMatrix::identity(2));
  EXPECT_LE(max_abs_diff(be.u, blockdiag(ComplexMatrix::identity(2),
                                         -1.0 * ComplexMatrix::identity(2))),
            1e-15);
}

TEST(BlockEncode, RandomContraction) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const ComplexMatrix a = random_contraction(3, 2, 0.9, seed);
    const BlockEncoding be = block_encode(a);
    EXPECT_LE(unitarity_residual(be.u), 1e-11);
    EXPECT_LE(max_abs_diff(be.encoded(), a), 1e-14);
    EXPECT_LE(projection_residual(be.pi_left()), 1e-14);
    EXPECT_LE(projection_residual(be.pi_right()), 1e-14);
  }
}

TEST(BlockEncode, RejectsNormAboveOne) {
  EXPECT_THROW(block_encode(ComplexMatrix{{1.1}}), NormError);
}

TEST(ComputationalEncoding, RejectsNonUnitary) {
  EXPECT_THROW(computational_encoding(ComplexMatrix{{1.0, 0.5}, {0.0, 1.0}}, 1, 1),
               ValidationError);
}

TEST(PhasedAlternating, SinglePhaseIsProjectorPhase) {
  const BlockEncoding be = block_encode(random_contraction(2, 2, 0.8, 3));
  const ComplexMatrix got = phased_alternating(be, PhaseSequence({0.3}));
  EXPECT_LE(max_abs_diff(got, projector_phase(be.pi_left(), 0.3)), 1e-14);
}

TEST(PhasedAlternating, ProjectorPhaseClosedForm) {
  const ComplexMatrix pi{{1.0, 0.0}, {0.0, 0.0}};
  const ComplexMatrix e = projector_phase(pi, 0.4);
  EXPECT_LE(std::abs(e(0, 0) - std::exp(kI * 0.4)), 1e-15);
  EXPECT_LE(std::abs(e(1, 1) - std::exp(-kI * 0.4)), 1e-15);
}

TEST(PhasedAlternating, ReflectionReproducesQsp) {
  for (double x : {-0.9, -0.3, 0.2, 0.75}) {
    const BlockEncoding be = computational_encoding(qsp_reflection(x), 1, 1);
    for (int n : {1, 2, 5, 8}) {
      const PhaseSequence phi = random_phases(static_cast<std::uint64_t>(n) + 3, n);
      EXPECT_LE(max_abs_diff(phased_alternating(be, phi), qsp_eval(phi, x)), 1e-13);
    }
  }
}

TEST(PhasedAlternating, IsUnitary) {
  const BlockEncoding be = computational_encoding(random_unitary(6, 9), 2, 3);
  EXPECT_LE(unitarity_residual(phased_alternating(be, random_phases(4, 3))), 1e-10);
}

TEST(PhasedAlternating, ProjectorPhaseCommutesWithBlockUnitaries) {
  const ComplexMatrix v = blockdiag(random_unitary(2, 1), random_unitary(3, 2));
  const ComplexMatrix pi = blockdiag(ComplexMatrix::identity(2), ComplexMatrix::zeros(3, 3));
  const ComplexMatrix e = projector_phase(pi, 0.9);
  EXPECT_LE(max_abs_diff(v * e, e * v), 1e-12);
}

TEST(SvTransform, PaperExamples) {
  const ComplexMatrix a = random_contraction(4, 3, 0.9, 21);
  const ComplexMatrix id3 = ComplexMatrix::identity(3);
  const ComplexMatrix even = sv_transform(a, [](double x) { return cplx(x * x + 1.0); },
                                          Parity::kEven);
  EXPECT_LE(max_abs_diff(even, a.adjoint() * a + id3), 1e-13);
  const ComplexMatrix odd = sv_transform(a, [](double x) { return cplx(x * x * x + x); },
                                         Parity::kOdd);
  EXPECT_LE(max_abs_diff(odd, a * a.adjoint() * a + a), 1e-13);
  EXPECT_LE(max_abs_diff(sv_transform(a, [](double x) { return cplx(x); }, Parity::kOdd), a),
            1e-13);
}

TEST(SvTransform, EvenUsesZeroPaddedSingularValues) {
  // A 2x3 matrix has a third right singular vector with sigma := 0.
  const ComplexMatrix a = random_contraction(2, 3, 0.7, 5);
  const ComplexMatrix got = sv_transform(a, [](double x) { return cplx(1.0 - x * x); },
                                         Parity::kEven);
  EXPECT_LE(max_abs_diff(got, ComplexMatrix::identity(3) - a.adjoint() * a), 1e-13);
}

TEST(VerifyQsvt, IdentityPolynomial) {
  const ComplexMatrix a = ComplexMatrix::diagonal({0.3, 0.7});
  const QsvtReport r = verify_qsvt(block_encode(a), PhaseSequence({0.0, 0.0}));
  EXPECT_LE(r.residual, 1e-12);
  EXPECT_EQ(r.parity, Parity::kOdd);
  EXPECT_EQ(r.degree, 1);
}

TEST(VerifyQsvt, SynthesizedT3OnRandomContraction) {
  const QspPair pair = complete_real(ChebyshevSeries({0.0, 0.0, 0.0, 1.0}),
                                     ChebyshevSeries({0.0}));
  const PhaseSequence phi = synthesize_phases(pair);
  const ComplexMatrix a = random_contraction(5, 3, 0.95, 8);
  const BlockEncoding be = block_encode(a);
  EXPECT_LE(verify_qsvt(be, phi).residual, 1e-8);
  // Independent target: Re(p) = T_3 on the singular values.
  const BlockEncoding re = real_part_encoding(be, phi);
  const ComplexMatrix t3 =
      sv_transform(a, [](double x) { return cplx(4 * x * x * x - 3 * x); }, Parity::kOdd);
  EXPECT_LE(max_abs_diff(re.encoded(), t3), 1e-8);
}

TEST(VerifyQsvt, BothParitiesAndRotatedBases) {
  for (int n = 0; n <= 9; ++n) {
    const PhaseSequence phi = random_phases(100 + n, n);
    const BlockEncoding be = block_encode(random_contraction(3 + n % 3, 2 + n % 4, 0.9, n));
    const double base = verify_qsvt(be, phi).residual;
    EXPECT_LE(base, 1e-10) << n;
    const double rotated = verify_qsvt(rotate(be, 300 + n), phi).residual;
    EXPECT_LE(rotated, 1e-10) << n;
    EXPECT_NEAR(rotated, base, 1e-10);
  }
}

TEST(VerifyQsvt, SpecialSingularValueBlocks) {
  // Singular values 0 and 1 exercise the one-dimensional blocks.
  const ComplexMatrix a = ComplexMatrix::diagonal({0.0, 1.0, 0.4});
  for (int n : {2, 3, 6, 7}) {
    EXPECT_LE(verify_qsvt(block_encode(a), random_phases(n, n)).residual, 1e-10);
  }
}

TEST(RealPartEncoding, MatchesAverageOfConjugatePolynomials) {
  const ComplexMatrix a = random_contraction(4, 3, 0.9, 2);
  const BlockEncoding be = block_encode(a);
  for (int n : {2, 3}) {
    const PhaseSequence phi = random_phases(40 + n, n);
    const QspPair pq = qsp_polynomials(phi);
    const ChebyshevSeries re = cplx(0.5) * (pq.p + conj(pq.p));
    const Parity par = n % 2 ? Parity::kOdd : Parity::kEven;
    const ComplexMatrix want = sv_transform(a, [&](double x) { return re(x); }, par);
    const BlockEncoding got = real_part_encoding(be, phi);
    EXPECT_LE(max_abs_diff(got.encoded(), want), 1e-10);
    EXPECT_LE(unitarity_residual(got.u), 1e-10);
    EXPECT_LE(max_abs_diff(real_part_encoding(be, phi.negated()).encoded(), got.encoded()),
              1e-12);
  }
}

TEST(RealPartEncoding, SinglePhase) {
  const BlockEncoding be = block_encode(ComplexMatrix{{0.4}});
  const BlockEncoding got = real_part_encoding(be, PhaseSequence({0.6}));
  EXPECT_NEAR(std::abs(got.encoded()(0, 0) - std::cos(0.6)), 0.0, 1e-14);
}

}  // namespace
}  // namespace qsvtkit
