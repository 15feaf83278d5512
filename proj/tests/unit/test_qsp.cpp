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
#include <numbers>
#include <random>

#include "qsvtkit/errors.hpp"
#include "qsvtkit/qsp.hpp"

namespace qsvtkit {
namespace {

const cplx kI(0.0, 1.0);

// e^{i phi sigma_z} R(x) e^{i phi_1 sigma_z} ... built from explicit 2x2 factors.
ComplexMatrix brute_product(const std::vector<double>& phi, double x) {
  auto rz = [](double a) {
    return ComplexMatrix{{std::exp(kI * a), 0.0}, {0.0, std::exp(-kI * a)}};
  };
  const double s = std::sqrt(1.0 - x * x);
  const ComplexMatrix r{{x, s}, {s, -x}};
  ComplexMatrix m = rz(phi[0]);
  for (std::size_t j = 1; j < phi.size(); ++j) m = m * r * rz(phi[j]);
  return m;
}

double max_coeff_diff(const ChebyshevSeries& a, const ChebyshevSeries& b) {
  const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx x = k < a.coeffs.size() ? a.coeffs[k] : cplx(0.0);
    const cplx y = k < b.coeffs.size() ? b.coeffs[k] : cplx(0.0);
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

std::vector<double> random_phases(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  std::vector<double> phi(n + 1);
  for (double& p : phi) p = u(rng);
  return phi;
}

ChebyshevSeries cheb(std::vector<cplx> c) { return ChebyshevSeries(std::move(c)); }

TEST(QspEval, SinglePhaseIsDiagonal) {
  const ComplexMatrix m = qsp_eval(PhaseSequence({0.4}), 0.3);
  EXPECT_NEAR(std::abs(m(0, 0) - std::exp(kI * 0.4)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(1, 1) - std::exp(-kI * 0.4)), 0.0, 1e-15);
  EXPECT_EQ(std::abs(m(0, 1)), 0.0);
}

TEST(QspEval, ZeroPhasesGiveReflection) {
  const ComplexMatrix m = qsp_eval(PhaseSequence({0.0, 0.0}), 0.3);
  EXPECT_NEAR(m(0, 0).real(), 0.3, 1e-15);
  EXPECT_LE(max_abs_diff(m, qsp_reflection(0.3)), 1e-15);
}

TEST(QspEval, AtOneIsPhaseSum) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 8; ++n) {
    const auto phi = random_phases(rng, n);
    double sum = 0.0;
    for (double p : phi) sum += p;
    EXPECT_LE(std::abs(qsp_eval(PhaseSequence(phi), 1.0)(0, 0) - std::exp(kI * sum)), 1e-13);
  }
}

TEST(QspEval, MatchesBruteProductAndIsUnitary) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto phi = random_phases(rng, trial % 12);
    const double x = ux(rng);
    const ComplexMatrix m = qsp_eval(PhaseSequence(phi), x);
    EXPECT_LE(unitarity_residual(m), 1e-12);
    if (trial % 10 == 0) EXPECT_LE(max_abs_diff(m, brute_product(phi, x)), 1e-13);
  }
}

TEST(QspEval, RejectsOutOfRange) {
  EXPECT_THROW(qsp_eval(PhaseSequence({0.0, 0.0}), 1.5), DomainError);
}

TEST(QspPolynomials, ZeroPhases) {
  const QspPair two = qsp_polynomials(PhaseSequence({0.0, 0.0}));
  EXPECT_LE(max_coeff_diff(two.p, cheb({0.0, 1.0})), 1e-15);
  EXPECT_LE(max_coeff_diff(two.q, cheb({1.0})), 1e-15);
  // R(x) is an involution, so two zero-phase layers cancel.
  const QspPair three = qsp_polynomials(PhaseSequence({0.0, 0.0, 0.0}));
  EXPECT_LE(max_coeff_diff(three.p, cheb({1.0})), 1e-15);
  EXPECT_LE(max_coeff_diff(three.q, cheb({0.0})), 1e-15);
  for (double x : {-0.8, 0.1, 0.6}) {
    EXPECT_LE(std::abs(brute_product({0.0, 0.0, 0.0}, x)(0, 0) - three.p(x)), 1e-15);
  }
}

TEST(QspPolynomials, AlternatingQuarterTurnsGiveT2) {
  // e^{i pi/4 Z} R e^{-i pi/2 Z} R e^{i pi/4 Z} has top-left 2x^2 - 1.
  const std::vector<double> phi{std::numbers::pi / 4, -std::numbers::pi / 2,
                                std::numbers::pi / 4};
  const QspPair pq = qsp_polynomials(PhaseSequence(phi));
  for (double x : {-0.8, 0.1, 0.6}) {
    EXPECT_LE(std::abs(brute_product(phi, x)(0, 0) - pq.p(x)), 1e-14);
    EXPECT_LE(std::abs(pq.p(x) - (2.0 * x * x - 1.0)), 1e-14);
  }
}

TEST(QspPolynomials, AgreeWithCircuitAtRandomPoints) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-1.0, 1.0);
  for (int n : {1, 2, 5, 10, 21}) {
    const auto phi = random_phases(rng, n);
    const QspPair pq = qsp_polynomials(PhaseSequence(phi));
    EXPECT_EQ(pq.p.degree(), n);
    EXPECT_EQ(pq.p.parity, n % 2 ? Parity::kOdd : Parity::kEven);
    EXPECT_TRUE(achievable_check(pq).ok);
    for (int k = 0; k < 200; ++k) {
      const double x = ux(rng);
      const ComplexMatrix m = qsp_eval(PhaseSequence(phi), x);
      EXPECT_LE(std::abs(m(0, 0) - pq.p(x)), 1e-10);
      EXPECT_LE(std::abs(m(1, 0) - pq.q(x) * std::sqrt(1.0 - x * x)), 1e-10);
    }
  }
}

TEST(QspPolynomials, ValueAtZeroForEvenDegree) {
  std::mt19937_64 rng(13);
  for (int n : {2, 4, 8}) {
    const auto phi = random_phases(rng, n);
    double alt = 0.0;
    for (std::size_t k = 0; k < phi.size(); ++k) alt += (k % 2 ? -1.0 : 1.0) * phi[k];
    EXPECT_LE(std::abs(qsp_polynomials(PhaseSequence(phi)).p(0.0) - std::exp(kI * alt)), 1e-13);
  }
}

TEST(Synthesize, ReflectionPair) {
  const QspPair pair{cheb({0.0, 1.0}), cheb({1.0})};
  const PhaseSequence phi = synthesize_phases(pair);
  ASSERT_EQ(phi.phases.size(), 2u);
  const QspPair back = qsp_polynomials(phi);
  EXPECT_LE(max_coeff_diff(back.p, pair.p), 1e-14);
  EXPECT_LE(max_coeff_diff(back.q, pair.q), 1e-14);
}

TEST(Synthesize, SecondChebyshevPolynomial) {
  const QspPair pair{cheb({0.0, 0.0, 1.0}), cheb({0.0, 2.0})};
  const QspPair back = qsp_polynomials(synthesize_phases(pair));
  EXPECT_LE(max_coeff_diff(back.p, pair.p), 1e-10);
  EXPECT_LE(max_coeff_diff(back.q, pair.q), 1e-10);
}

TEST(Synthesize, DegreeZeroBaseCase) {
  const QspPair pair{cheb({std::exp(kI * 0.7)}), cheb({0.0})};
  const PhaseSequence phi = synthesize_phases(pair);
  ASSERT_EQ(phi.phases.size(), 1u);
  EXPECT_NEAR(std::remainder(phi.phases[0] - 0.7, 2.0 * std::numbers::pi), 0.0, 1e-14);
}

TEST(Synthesize, RoundtripRandomPhases) {
  std::mt19937_64 rng(17);
  for (int n : {1, 2, 3, 6, 9, 16, 24}) {
    const QspPair pair = qsp_polynomials(PhaseSequence(random_phases(rng, n)));
    const PhaseSequence phi = synthesize_phases(pair);
    EXPECT_EQ(phi.degree(), n);
    const QspPair back = qsp_polynomials(phi);
    EXPECT_LE(max_coeff_diff(back.p, pair.p), 1e-8) << n;
    EXPECT_LE(max_coeff_diff(back.q, pair.q), 1e-8) << n;
  }
}

TEST(Synthesize, RejectsNonAchievable) {
  const QspPair pair{cheb({0.0, 1.0}), cheb({0.0})};
  EXPECT_THROW(synthesize_phases(pair), NotAchievableError);
}

TEST(Achievable, Examples) {
  EXPECT_TRUE(achievable_check({cheb({0.0, 1.0}), cheb({1.0})}).ok);
  const AchievableReport bad = achievable_check({cheb({0.0, 1.0}), cheb({0.0})});
  EXPECT_FALSE(bad.ok);
  EXPECT_NEAR(bad.residual, 1.0, 1e-14);
  // T_3 with q = U_2 = 4x^2 - 1 = 2 T_2 + T_0 satisfies T_3^2 + (1-x^2) U_2^2 = 1.
  EXPECT_TRUE(achievable_check({cheb({0.0, 0.0, 0.0, 1.0}), cheb({1.0, 0.0, 2.0})}).ok);
  // Parities must be opposite.
  const AchievableReport par = achievable_check({cheb({0.0, 1.0}), cheb({0.0, 1.0})});
  EXPECT_FALSE(par.ok);
}

TEST(CompleteReal, IdentityPolynomial) {
  const QspPair pair = complete_real(cheb({0.0, 1.0}), cheb({0.0}));
  EXPECT_TRUE(achievable_check(pair).ok);
  EXPECT_NEAR(pair.p.coeffs[1].real(), 1.0, 1e-10);
  EXPECT_NEAR(std::abs(pair.q(0.3)), 1.0, 1e-10);
  EXPECT_NEAR(pair.q(0.3).real(), 0.0, 1e-10);
}

TEST(CompleteReal, ConstantOne) {
  const QspPair pair = complete_real(cheb({1.0}), cheb({0.0}));
  EXPECT_NEAR(std::abs(pair.p(0.2) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(pair.q(0.2)), 0.0, 1e-12);
}

TEST(CompleteReal, ChebyshevPolynomialsRoundtrip) {
  for (int n = 1; n <= 9; ++n) {
    std::vector<cplx> c(n + 1, 0.0);
    c[n] = 1.0;
    const QspPair pair = complete_real(cheb(c), cheb({0.0}));
    EXPECT_TRUE(achievable_check(pair).ok) << n;
    for (double x : {-0.9, -0.2, 0.4, 0.8}) {
      EXPECT_NEAR(pair.p(x).real(), std::cos(n * std::acos(x)), 1e-8);
      EXPECT_NEAR(pair.q(x).real(), 0.0, 1e-8);
    }
    const QspPair back = qsp_polynomials(synthesize_phases(pair));
    EXPECT_LE(max_coeff_diff(back.p, pair.p), 1e-8);
  }
}

TEST(CompleteReal, ScaledPolynomialWithRealQ) {
  // p_re = 0.5 x^3 (odd), q_re = 0.3 x^2 (even) satisfy p^2 + (1-x^2) q^2 <= 1.
  const ChebyshevSeries pr = ChebyshevSeries::from_monomial({0.0, 0.0, 0.0, 0.5});
  const ChebyshevSeries qr = ChebyshevSeries::from_monomial({0.0, 0.0, 0.3});
  const QspPair pair = complete_real(pr, qr);
  EXPECT_TRUE(achievable_check(pair).ok);
  for (double x : {-0.7, 0.1, 0.55, 0.99}) {
    EXPECT_NEAR(pair.p(x).real(), pr(x).real(), 1e-8);
    EXPECT_NEAR(pair.q(x).real(), qr(x).real(), 1e-8);
  }
}

TEST(CompleteReal, RejectsViolation) {
  EXPECT_THROW(complete_real(cheb({0.0, 1.2}), cheb({0.0})), Error);
}

}  // namespace
}  // namespace qsvtkit
