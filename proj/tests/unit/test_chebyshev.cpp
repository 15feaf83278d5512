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

#include "qsvtkit/chebyshev.hpp"
#include "qsvtkit/errors.hpp"
#include "qsvtkit/special.hpp"

namespace qsvtkit {
namespace {

cplx recurrence(int n, cplx z) {
  cplx t0 = 1.0, t1 = z;
  if (n == 0) return t0;
  for (int k = 1; k < n; ++k) {
    const cplx t2 = 2.0 * z * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

double grid_error(const ChebyshevSeries& s, const std::function<double(double)>& f,
                  int points = 10000) {
  double worst = 0.0;
  for (int j = 0; j <= points; ++j) {
    const double x = std::cos(std::numbers::pi * j / points);
    worst = std::max(worst, std::abs(s(x) - f(x)));
  }
  return worst;
}

TEST(ChebEval, Examples) {
  for (int n = 0; n < 20; ++n) EXPECT_NEAR(cheb_eval(n, 1.0).real(), 1.0, 1e-14);
  EXPECT_NEAR(cheb_eval(3, 0.5).real(), -1.0, 1e-14);
  const cplx want = recurrence(10, 1.1);
  EXPECT_LE(std::abs(cheb_eval(10, 1.1) - want), 1e-12 * std::abs(want));
}

TEST(ChebEval, MatchesRecurrenceInDisk) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.4, 1.4);
  for (int trial = 0; trial < 500; ++trial) {
    const cplx z(u(rng), u(rng));
    if (std::abs(z) > 2.0) continue;
    const int n = trial % 30;
    const cplx want = recurrence(n, z);
    EXPECT_LE(std::abs(cheb_eval(n, z) - want), 1e-12 * std::max(1.0, std::abs(want)))
        << n << " " << z;
  }
}

TEST(ChebEval, BoundedOnInterval) {
  for (int n = 0; n < 40; ++n) {
    for (double x = -1.0; x <= 1.0; x += 0.01) EXPECT_LE(std::abs(cheb_eval(n, x)), 1.0 + 1e-14);
  }
}

TEST(Series, MonomialRoundtrip) {
  // Monomial coefficients of a degree-n series grow like (1 + sqrt 2)^n, so
  // the roundtrip error is about 1e-16 times that growth.
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (int n : {0, 1, 7, 16, 20, 40, 64}) {
    std::vector<cplx> c(n + 1);
    for (auto& v : c) v = {g(rng), g(rng)};
    const ChebyshevSeries s(c);
    const ChebyshevSeries back = ChebyshevSeries::from_monomial(s.to_monomial());
    const double tol = n <= 16 ? 1e-10 : 1e-13 * std::pow(1.0 + std::sqrt(2.0), n);
    for (int k = 0; k <= n; ++k) EXPECT_LE(std::abs(back.coeffs[k] - c[k]), tol) << n;
  }
}

TEST(Series, CubeMonomial) {
  const ChebyshevSeries s = ChebyshevSeries::from_monomial({0.0, 0.0, 0.0, 1.0});
  EXPECT_NEAR(s.coeffs[1].real(), 0.75, 1e-15);
  EXPECT_NEAR(s.coeffs[3].real(), 0.25, 1e-15);
}

TEST(Series, ParityCheck) {
  ChebyshevSeries s({0.0, 1.0, 0.0, 2.0}, Parity::kOdd);
  EXPECT_NO_THROW(s.check_parity());
  s.parity = Parity::kEven;
  EXPECT_THROW(s.check_parity(), ValidationError);
  EXPECT_EQ(detect_parity({1.0, 0.0, 3.0}), Parity::kEven);
  EXPECT_EQ(detect_parity({1.0, 1.0}), Parity::kNone);
}

TEST(Series, ProductAndDerivative) {
  const ChebyshevSeries a({0.5, 0.2, -0.3});
  const ChebyshevSeries b({0.1, 0.0, 0.4, 0.7});
  const ChebyshevSeries ab = a * b;
  const ChebyshevSeries da = derivative(ab);
  for (double x : {-0.9, -0.1, 0.3, 0.8}) {
    EXPECT_LE(std::abs(ab(x) - a(x) * b(x)), 1e-14);
    const double h = 1e-5;
    EXPECT_NEAR(da(x).real(), (ab(x + h) - ab(x - h)).real() / (2 * h), 1e-8);
    EXPECT_LE(std::abs(mul_one_minus_x2(a)(x) - (1 - x * x) * a(x)), 1e-14);
    EXPECT_LE(std::abs(mul_x(a)(x) - x * a(x)), 1e-14);
  }
}

TEST(Interpolant, ReproducesPolynomials) {
  const ChebyshevSeries s = series_from_interpolant([](double x) { return cheb_eval(5, x); }, 8);
  for (int k = 0; k <= 8; ++k) EXPECT_NEAR(std::abs(s.coeffs[k]), k == 5 ? 1.0 : 0.0, 1e-14);
}

TEST(Interpolant, MatchesNodes) {
  auto f = [](double x) { return cplx(std::exp(x) * std::sin(3 * x)); };
  const int n = 33;
  const ChebyshevSeries s = series_from_interpolant(f, n);
  for (double x : chebyshev_points(n)) EXPECT_LE(std::abs(s(x) - f(x)), 1e-12);
}

TEST(Interpolant, ExpCoefficientsAreBessel) {
  const ChebyshevSeries s = series_from_interpolant([](double x) { return cplx(std::exp(x)); }, 20);
  EXPECT_NEAR(s.coeffs[0].real(), bessel_i(0, 1.0), 1e-14);
  for (int k = 1; k <= 12; ++k) {
    EXPECT_NEAR(s.coeffs[k].real(), 2.0 * bessel_i(k, 1.0), 1e-14) << k;
  }
}

TEST(Interpolant, AbsoluteValueIsEven) {
  const ChebyshevSeries s = series_from_interpolant([](double x) { return cplx(std::abs(x)); }, 4);
  EXPECT_NEAR(std::abs(s.coeffs[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.coeffs[3]), 0.0, 1e-15);
  EXPECT_GT(std::abs(s.coeffs[2]), 0.1);
}

TEST(Interpolant, NonFiniteNodeIsEvaluationError) {
  EXPECT_THROW(series_from_interpolant([](double x) { return cplx(1.0 / (x - 1.0)); }, 6),
               EvaluationError);
}

TEST(Quadrature, ConstantAndExp) {
  const ChebyshevSeries one = series_from_quadrature([](double) { return cplx(1.0); }, 5);
  EXPECT_NEAR(one.coeffs[0].real(), 1.0, 1e-15);
  for (int k = 1; k <= 5; ++k) EXPECT_NEAR(std::abs(one.coeffs[k]), 0.0, 1e-15);
  const ChebyshevSeries e = series_from_quadrature([](double x) { return cplx(std::exp(x)); }, 10);
  EXPECT_NEAR(e.coeffs[1].real(), 2.0 * bessel_i(1, 1.0), 1e-14);
  const ChebyshevSeries c = series_from_quadrature([](double x) { return cplx(x * x * x); }, 6);
  EXPECT_NEAR(c.coeffs[1].real(), 0.75, 1e-15);
  EXPECT_NEAR(c.coeffs[3].real(), 0.25, 1e-15);
}

TEST(Quadrature, AgreesWithInterpolantForAnalyticF) {
  auto f = [](double x) { return cplx(std::cos(4 * x), std::exp(-x * x)); };
  const ChebyshevSeries a = series_from_quadrature(f, 40);
  const ChebyshevSeries b = series_from_interpolant(f, 40);
  for (int k = 0; k <= 40; ++k) EXPECT_LE(std::abs(a.coeffs[k] - b.coeffs[k]), 1e-8);
}

TEST(Trefethen, Examples) {
  EXPECT_EQ(trefethen_degree(1.0, 2.0, 2.0), 0);
  EXPECT_EQ(trefethen_degree(1.0, 2.0, 1e-3), 11);
  for (int n : {3, 11, 40}) {
    EXPECT_LE(trefethen_bound(1.0, 2.0, trefethen_degree(1.0, 2.0, std::pow(10.0, -n / 4.0))),
              std::pow(10.0, -n / 4.0));
  }
}

TEST(Trefethen, BoundHoldsForAnalyticFunction) {
  // 1 / (x - 2) is analytic inside E_rho for rho < 2 + sqrt(3).
  auto f = [](double x) { return 1.0 / (x - 2.0); };
  const double rho = 3.0;
  const double a = 0.5 * (rho + 1 / rho);
  const double m = 1.0 / (2.0 - a);  // max |f| on E_rho, attained at z = a
  for (int n : {4, 8, 16}) {
    const ChebyshevSeries fn = truncated(
        series_from_quadrature([&](double x) { return cplx(f(x)); }, 64), n);
    EXPECT_LE(grid_error(fn, f), trefethen_bound(m, rho, n)) << n;
  }
}

TEST(TriangleInequality, TruncationErrorBelowTail) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = u(rng), b = u(rng), c = 2.5 + std::abs(u(rng));
    auto f = [=](double x) { return std::exp(a * x) * std::cos(b * x) / (c - x); };
    const ChebyshevSeries full =
        series_from_interpolant([&](double x) { return cplx(f(x)); }, 128);
    for (int n : {4, 10, 20}) {
      EXPECT_LE(grid_error(truncated(full, n), f, 2000), full.tail_l1(n) + 1e-13);
    }
  }
}

TEST(ExpCoefficients, AreTwiceBessel) {
  for (double t : {0.5, 1.0, 5.0, 20.0}) {
    const ChebyshevSeries s =
        series_from_interpolant([t](double x) { return cplx(std::exp(t * x)); }, 128);
    for (int k = 0; k <= 80; ++k) {
      const double want = (k == 0 ? 1.0 : 2.0) * bessel_i(k, t);
      if (want < 1e-6 * std::exp(t)) break;
      EXPECT_NEAR(s.coeffs[k].real(), want, 1e-9 * want) << t << " " << k;
    }
  }
}

TEST(Carlini, DominatesBessel) {
  for (double t : {0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0, 200.0}) {
    for (int n : {1, 2, 5, 10, 25, 60, 150, 500}) {
      EXPECT_LT(log_bessel_i(n, t), log_carlini_bound(n, t)) << n << " " << t;
    }
  }
  EXPECT_LT(bessel_i(25, 10.0), carlini_bound(25, 10.0));
  EXPECT_LT(bessel_i(5, 5.0), carlini_bound(5, 5.0));
  EXPECT_THROW(carlini_bound(3, 0.0), DomainError);
}

TEST(Carlini, DecreasingBeyondThreeT) {
  for (double t : {1.0, 4.0, 10.0}) {
    const int lo = static_cast<int>(std::ceil(3 * t));
    const int hi = 10 * static_cast<int>(std::ceil(t));
    for (int n = lo; n < hi; ++n) EXPECT_LT(carlini_bound(n + 1, t), carlini_bound(n, t));
  }
}

TEST(SolveR, SolvesDefiningEquation) {
  for (double big_t : {3.0, 15.0, 60.0}) {
    for (double eps : {0.5, 1e-3, 1e-10}) {
      const double r = solve_r(big_t, eps);
      EXPECT_GE(r, big_t);
      EXPECT_NEAR(r * std::log(big_t / r), std::log(eps), 1e-9 * std::abs(std::log(eps)) + 1e-12);
    }
  }
}

TEST(ExpDegree, ZeroCases) {
  EXPECT_EQ(exp_truncation_degree(0.0, 0.5), 0);
  EXPECT_EQ(exp_truncation_degree(2.0, std::exp(2.0)), 0);
  EXPECT_EQ(exp_regime(2.0, std::exp(2.5)), 1);
}

TEST(ExpDegree, TailOracle) {
  const int n = exp_truncation_degree(20.0, 1e-6);
  double tail = 0.0;
  for (int k = n + 1; k < n + 200; ++k) tail += 2.0 * bessel_i(k, 20.0);
  EXPECT_LE(tail, 1e-6);
}

TEST(ExpDegree, GridErrorAcrossRegimes) {
  struct Case {
    double t, eps;
    int regime;
  };
  for (const Case c : {Case{5.0, 20.0, 2}, Case{20.0, std::exp(8.0), 2}, Case{5.0, 1e-2, 3},
                       Case{8.0, 1e-6, 4}, Case{0.5, 1e-12, 4}, Case{-3.0, 1e-3, 4}}) {
    EXPECT_EQ(exp_regime(c.t, c.eps), c.regime) << c.t << " " << c.eps;
    const int n = exp_truncation_degree(c.t, c.eps);
    const ChebyshevSeries s = truncated(
        series_from_interpolant([&](double x) { return cplx(std::exp(c.t * x)); }, n + 64), n);
    EXPECT_LE(grid_error(s, [&](double x) { return std::exp(c.t * x); }), c.eps);
    const double ratio = n / exp_regime_formula(c.t, c.eps);
    EXPECT_LE(ratio, 8.0);
    EXPECT_GE(ratio, 1.0 / 8.0);
  }
}

TEST(MeasureSup, FindsInteriorPeak) {
  EXPECT_NEAR(measure_sup([](double x) { return 1.0 - (x - 0.123) * (x - 0.123); }, -1.0, 1.0,
                          101),
              1.0, 1e-10);
}

}  // namespace
}  // namespace qsvtkit
