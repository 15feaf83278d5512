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

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "qsvtkit/errors.hpp"
#include "qsvtkit/linalg.hpp"
#include "qsvtkit/matrix.hpp"
#include "qsvtkit/special.hpp"

namespace qsvtkit {
namespace {

using std::numbers::pi;

// I_n(t) = (1/pi) int_0^pi e^{t cos th} cos(n th) d th; the trapezoid rule is
// spectrally accurate for this periodic integrand.
double bessel_quadrature(int n, double t) {
  const int m = 4000;
  double s = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double th = pi * j / m;
    const double w = (j == 0 || j == m) ? 0.5 : 1.0;
    s += w * std::exp(t * std::cos(th)) * std::cos(n * th);
  }
  return s / m;
}

// erf(z) = (2 / sqrt(pi)) int_0^1 z e^{-(z u)^2} du, composite Simpson.
std::complex<double> erf_quadrature(std::complex<double> z) {
  const int m = 20000;
  std::complex<double> s = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double u = static_cast<double>(j) / m;
    const double w = (j == 0 || j == m) ? 1.0 : (j % 2 ? 4.0 : 2.0);
    s += w * std::exp(-(z * u) * (z * u));
  }
  return z * s / (3.0 * m) * (2.0 / std::sqrt(pi));
}

TEST(Svd, IdentityHasUnitSingularValues) {
  const SvdResult s = svd(ComplexMatrix::identity(3));
  ASSERT_EQ(s.sigma.size(), 3u);
  for (double v : s.sigma) EXPECT_NEAR(v, 1.0, 1e-15);
  EXPECT_LE(max_abs_diff(svd_reconstruct(s, 3, 3), ComplexMatrix::identity(3)), 1e-14);
}

TEST(Svd, DiagonalIsSorted) {
  const SvdResult s = svd(ComplexMatrix{{1.0, 0.0}, {0.0, 2.0}});
  ASSERT_EQ(s.sigma.size(), 2u);
  EXPECT_NEAR(s.sigma[0], 2.0, 1e-15);
  EXPECT_NEAR(s.sigma[1], 1.0, 1e-15);
}

TEST(Svd, RandomRectangularReconstructs) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (auto [r, c] : {std::pair<std::size_t, std::size_t>{8, 5}, {5, 8}, {7, 7}}) {
      const ComplexMatrix a = random_gaussian(r, c, seed);
      const SvdResult s = svd(a);
      EXPECT_LE((a - svd_reconstruct(s, r, c)).frobenius_norm(), 1e-12 * a.frobenius_norm());
      EXPECT_LE(unitarity_residual(s.v), 1e-12);
      EXPECT_LE(unitarity_residual(s.w), 1e-12);
      for (std::size_t i = 0; i + 1 < s.sigma.size(); ++i) EXPECT_GE(s.sigma[i], s.sigma[i + 1]);
      EXPECT_GE(s.sigma.back(), 0.0);
    }
  }
}

TEST(Svd, ReconstructionIsIdempotentOnSingularValues) {
  const ComplexMatrix a = random_gaussian(6, 4, 3);
  const SvdResult s1 = svd(a);
  const SvdResult s2 = svd(svd_reconstruct(s1, 6, 4));
  for (std::size_t i = 0; i < s1.sigma.size(); ++i) {
    EXPECT_NEAR(s1.sigma[i], s2.sigma[i], 1e-12 * s1.sigma[0]);
  }
}

TEST(Svd, RankDeficient) {
  ComplexMatrix a = random_gaussian(6, 2, 4);
  ComplexMatrix b(6, 4);
  b.set_block(0, 0, a);
  b.set_block(0, 2, a);
  const SvdResult s = svd(b);
  EXPECT_LE(s.sigma[2], 1e-12);
  EXPECT_LE((b - svd_reconstruct(s, 6, 4)).frobenius_norm(), 1e-12 * b.frobenius_norm());
}

TEST(Qr, Identity) {
  const QrResult qr = qr_positive_diag(ComplexMatrix::identity(3));
  EXPECT_LE(max_abs_diff(qr.q, ComplexMatrix::identity(3)), 1e-15);
  EXPECT_LE(max_abs_diff(qr.r, ComplexMatrix::identity(3)), 1e-15);
}

TEST(Qr, SignIsAbsorbedByQ) {
  const QrResult qr = qr_positive_diag(ComplexMatrix{{-1.0}});
  EXPECT_NEAR(qr.q(0, 0).real(), -1.0, 1e-15);
  EXPECT_NEAR(qr.r(0, 0).real(), 1.0, 1e-15);
}

TEST(Qr, RandomTallMatrix) {
  const ComplexMatrix a = random_gaussian(6, 4, 11);
  const QrResult qr = qr_positive_diag(a);
  EXPECT_LE(max_abs_diff(qr.q.adjoint() * qr.q, ComplexMatrix::identity(qr.q.cols())), 1e-12);
  EXPECT_LE(max_abs_diff(a, qr.q * qr.r), 1e-12 * a.max_abs());
  for (std::size_t i = 0; i < qr.r.rows(); ++i) {
    for (std::size_t j = 0; j < std::min(i, qr.r.cols()); ++j) EXPECT_EQ(std::abs(qr.r(i, j)), 0.0);
    if (i < qr.r.cols()) {
      EXPECT_GE(qr.r(i, i).real(), 0.0);
      EXPECT_EQ(qr.r(i, i).imag(), 0.0);
    }
  }
}

TEST(RandomUnitary, IsUnitary) {
  for (std::size_t n : {1u, 2u, 5u, 16u, 40u}) {
    EXPECT_LE(unitarity_residual(random_unitary(n, n + 7)), 1e-12);
  }
}

TEST(RandomUnitary, SeedIsDeterministic) {
  EXPECT_EQ(max_abs_diff(random_unitary(6, 42), random_unitary(6, 42)), 0.0);
  EXPECT_GT(max_abs_diff(random_unitary(6, 42), random_unitary(6, 43)), 0.1);
}

TEST(Tolerance, RejectsBadClusterTolerance) {
  Tolerance t;
  t.sv_cluster_tol = 0.5;
  EXPECT_THROW(t.validate(), ValidationError);
  t.sv_cluster_tol = 1e-8;
  t.residual_tol = -1.0;
  EXPECT_THROW(t.validate(), ValidationError);
}

TEST(Erf, ZeroAndRealAxis) {
  EXPECT_EQ(erf_complex(0.0), std::complex<double>(0.0, 0.0));
  for (double x : {-3.0, -0.7, 0.1, 1.0, 2.5, 5.0, 12.0}) {
    EXPECT_NEAR(erf_complex(x).real(), std::erf(x), 1e-15);
    EXPECT_EQ(erf_complex(x).imag(), 0.0);
  }
}

TEST(Erf, TailBound) {
  for (double x : {0.5, 1.0, 2.0, 4.0}) {
    EXPECT_LT(1.0 - erf_complex(x).real(), 2.0 * std::exp(-x * x));
  }
}

TEST(Erf, ImaginaryUnit) {
  const auto v = erf_complex({0.0, 1.0});
  EXPECT_EQ(v.real(), 0.0);
  EXPECT_LT(std::abs(v), 2.0 * std::exp(1.0));
  EXPECT_NEAR(v.imag(), erf_quadrature({0.0, 1.0}).imag(), 1e-12 * std::abs(v));
}

TEST(Erf, MatchesQuadratureOnComplexGrid) {
  for (double x : {-4.0, -1.5, -0.2, 0.3, 1.0, 2.5, 3.5}) {
    for (double y : {-2.0, -0.5, 0.0, 0.25, 1.5, 2.5}) {
      const std::complex<double> z(x, y);
      const auto ref = erf_quadrature(z);
      EXPECT_LE(std::abs(erf_complex(z) - ref), 1e-12 * std::max(1.0, std::abs(ref))) << z;
    }
  }
}

TEST(Erf, OddAndConjugateSymmetric) {
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const std::complex<double> z(-6.0 + 1.3 * i, -4.0 + 0.9 * j);
      const auto v = erf_complex(z);
      const double scale = std::max(1.0, std::abs(v));
      EXPECT_LE(std::abs(erf_complex(-z) + v), 1e-13 * scale);
      EXPECT_LE(std::abs(erf_complex(std::conj(z)) - std::conj(v)), 1e-13 * scale);
    }
  }
}

TEST(Erf, OutsideWindowIsDomainError) {
  EXPECT_THROW(erf_complex({0.0, 60.0}), DomainError);
}

TEST(Bessel, AtZero) {
  EXPECT_EQ(bessel_i(0, 0.0), 1.0);
  for (int n = 1; n < 5; ++n) EXPECT_EQ(bessel_i(n, 0.0), 0.0);
}

TEST(Bessel, MatchesQuadrature) {
  for (double t : {0.1, 0.5, 1.0, 5.0, 20.0, 50.0}) {
    for (int n : {0, 1, 2, 5, 10, 25}) {
      // The quadrature cancels down to about 1e-16 e^t absolute.
      const double ref = bessel_quadrature(n, t);
      if (ref < 1e-5 * std::exp(t)) continue;
      EXPECT_NEAR(bessel_i(n, t), ref, 1e-10 * ref) << n << " " << t;
    }
  }
}

TEST(Bessel, MatchesBoostAcrossScales) {
  for (double t : {0.01, 0.5, 1.0, 5.0, 20.0, 100.0, 500.0}) {
    for (int n : {0, 1, 3, 10, 25, 80, 200}) {
      const double ref = boost::math::cyl_bessel_i(n, t);
      if (ref < 1e-290 || !std::isfinite(ref)) continue;
      EXPECT_NEAR(bessel_i(n, t), ref, 1e-10 * ref) << n << " " << t;
    }
  }
}

TEST(Bessel, ReflectionAndSign) {
  for (int n = 0; n < 8; ++n) {
    const double v = bessel_i(n, 3.0);
    EXPECT_GE(v, 0.0);
    EXPECT_NEAR(bessel_i(n, -3.0), (n % 2 ? -1.0 : 1.0) * v, 1e-15 * v);
  }
}

TEST(Bessel, ThreeTermRecurrence) {
  for (double t : {0.5, 1.0, 3.0, 10.0, 50.0}) {
    for (int n = 1; n < 60; ++n) {
      const double lhs = bessel_i(n - 1, t) - bessel_i(n + 1, t);
      const double rhs = 2.0 * n / t * bessel_i(n, t);
      if (rhs < 1e-290) break;
      EXPECT_NEAR(lhs, rhs, 1e-9 * rhs) << n << " " << t;
    }
  }
}

TEST(Bessel, LogFormHandlesLargeArguments) {
  // log I_0(t) ~ t - log(2 pi t) / 2 for large t.
  const double t = 5000.0;
  EXPECT_NEAR(log_bessel_i(0, t), t - 0.5 * std::log(2.0 * pi * t), 1e-4);
  EXPECT_THROW(bessel_i(0, 1000.0), OverflowError);
}

}  // namespace
}  // namespace qsvtkit
