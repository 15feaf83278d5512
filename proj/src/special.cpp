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
#include "qsvtkit/special.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qsvtkit/errors.hpp"

namespace qsvtkit {

namespace {

using lcplx = std::complex<long double>;

constexpr long double kTwoOverSqrtPi = 1.1283791670955125738961589031215452L;
constexpr long double kInvSqrtPi = 0.5641895835477562869480794515607726L;
constexpr long double kSeriesEps = 1e-21L;

// erf(z) = (2/sqrt(pi)) exp(-z^2) sum_n 2^n z^(2n+1) / (2n+1)!!
// All terms share a phase when z is real, which keeps cancellation small
// for Re z >= Im z.
lcplx erf_scaled_series(lcplx z) {
  const lcplx z2 = z * z;
  lcplx term = z;
  lcplx sum = term;
  for (int n = 1; n < 2000; ++n) {
    term *= 2.0L * z2 / static_cast<long double>(2 * n + 1);
    sum += term;
    if (std::abs(term) <= kSeriesEps * std::abs(sum)) break;
  }
  return kTwoOverSqrtPi * std::exp(-z2) * sum;
}

// erf(z) = (2/sqrt(pi)) sum_n (-1)^n z^(2n+1) / (n! (2n+1))
lcplx erf_maclaurin(lcplx z) {
  const lcplx z2 = z * z;
  lcplx power = z;  // (-1)^n z^(2n+1) / n!
  lcplx sum = z;
  for (int n = 1; n < 20000; ++n) {
    power *= -z2 / static_cast<long double>(n);
    const lcplx term = power / static_cast<long double>(2 * n + 1);
    sum += term;
    if (std::abs(term) <= kSeriesEps * std::abs(sum) && n > std::norm(z)) break;
  }
  return kTwoOverSqrtPi * sum;
}

// erfc(z) = exp(-z^2)/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
// for Re z > 0, evaluated with the modified Lentz algorithm.
lcplx erfc_continued_fraction(lcplx z) {
  constexpr long double tiny = 1e-300L;
  lcplx f = z;
  lcplx c = f;
  lcplx d = 0.0L;
  for (int k = 1; k < 20000; ++k) {
    const long double a = 0.5L * k;
    d = z + a * d;
    if (std::abs(d) == 0.0L) d = tiny;
    d = 1.0L / d;
    c = z + a / c;
    if (std::abs(c) == 0.0L) c = tiny;
    const lcplx delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0L) < kSeriesEps) break;
  }
  return kInvSqrtPi * std::exp(-z * z) / f;
}

lcplx erf_first_quadrant(long double x, long double y) {
  const lcplx z(x, y);
  const long double r = std::abs(z);
  if (r <= 3.0L) return x >= y ? erf_scaled_series(z) : erf_maclaurin(z);
  if (x < 2.5L) return erf_maclaurin(z);
  return 1.0L - erfc_continued_fraction(z);
}

}  // namespace

std::complex<double> erf_complex(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("erf_complex: non-finite argument");
  }
  if (std::abs(z.imag()) > kErfImagLimit) {
    throw DomainError("erf_complex: |Im z| = " + std::to_string(std::abs(z.imag())) +
                      " exceeds the supported limit " +
                      std::to_string(kErfImagLimit));
  }
  if (z == std::complex<double>(0.0, 0.0)) return z;
  const lcplx w = erf_first_quadrant(std::abs(z.real()), std::abs(z.imag()));
  std::complex<double> out(static_cast<double>(w.real()),
                           static_cast<double>(w.imag()));
  if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) {
    throw OverflowError("erf_complex: value overflows at z = (" +
                        std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                        ")");
  }
  const bool neg_re = std::signbit(z.real());
  const bool neg_im = std::signbit(z.imag());
  if (neg_re && neg_im) return -out;
  if (neg_re) return -std::conj(out);
  if (neg_im) return std::conj(out);
  return out;
}

double log_bessel_i(int n, double t) {
  if (n < 0 || n > 10000) {
    throw DomainError("bessel_i: order " + std::to_string(n) + " outside [0, 10000]");
  }
  if (!std::isfinite(t) || std::abs(t) > 1e4) {
    throw DomainError("bessel_i: |t| must not exceed 1e4");
  }
  const double a = std::abs(t);
  if (a == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (a < 1e-8) {
    // Leading term of the power series (t/2)^n / n!.
    return n * std::log(0.5 * a) - std::lgamma(n + 1.0) + 0.25 * a * a / (n + 1.0);
  }
  // Miller backward recurrence I_{k-1} = I_{k+1} + (2k/t) I_k, normalised by
  // I_0 + 2 sum_{k>=1} I_k = e^t. Stored values carry a common factor e^scale.
  const int start = n + 50 + static_cast<int>(std::ceil(std::sqrt(90.0 * std::max(a, 1.0))));
  long double next = 0.0L;  // I_{k+1}
  long double cur = 1e-30L;  // I_k
  long double sum = 0.0L;
  long double scale = 0.0L;
  long double log_target = 0.0L;
  bool have_target = false;
  for (int k = start; k >= 1; --k) {
    const long double prev = next + (2.0L * k / a) * cur;  // I_{k-1}
    sum += 2.0L * cur;
    if (k == n) {
      log_target = std::log(cur) + scale;
      have_target = true;
    }
    next = cur;
    cur = prev;
    if (cur > 1e300L) {
      next *= 1e-300L;
      cur *= 1e-300L;
      sum *= 1e-300L;
      scale += 300.0L * std::log(10.0L);
    }
  }
  sum += cur;
  if (!have_target) log_target = std::log(cur) + scale;  // n == 0
  const long double log_sum = std::log(sum) + scale;
  return static_cast<double>(log_target - log_sum + a);
}

double bessel_i(int n, double t) {
  const double l = log_bessel_i(n, t);
  if (l > std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("bessel_i: I_" + std::to_string(n) + "(" + std::to_string(t) +
                        ") exceeds the double range; log value " + std::to_string(l));
  }
  const double v = std::exp(l);
  return (t < 0.0 && n % 2 == 1) ? -v : v;
}

}  // namespace qsvtkit
