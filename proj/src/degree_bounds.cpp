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

#include "qsvtkit/degree_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qsvtkit/errors.hpp"
#include "qsvtkit/format.hpp"

namespace qsvtkit {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kBernsteinSlack = 1e-10;
constexpr double kSeparationEps = 0.1;

}  // namespace

double bernstein_check(const ChebyshevSeries& p, int grid_points) {
  if (grid_points < 2) throw ValidationError("bernstein_check: grid_points must be >= 2");
  double scale = 0.0;
  for (const auto& c : p.coeffs) scale = std::max(scale, std::abs(c));
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (std::abs(p.coeffs[k].imag()) > 1e-12 * std::max(scale, 1.0)) {
      throw ValidationError("bernstein_check: coefficient " + std::to_string(k) +
                            " is not real");
    }
  }
  const int deg = p.degree();
  const int points = std::max(grid_points, 4 * deg);
  for (int j = 0; j <= points; ++j) {
    const double x = std::cos(kPi * j / points);
    const double v = std::abs(p(x));
    if (v > 1.0 + kBernsteinSlack) {
      throw ValidationError("bernstein_check: |p(" + format_number(x) + ")| = " +
                            format_number(v) + " exceeds 1");
    }
  }
  if (deg == 0) return 0.0;
  const ChebyshevSeries dp = derivative(p);
  auto ratio = [&](double theta) {
    return std::abs(dp(std::cos(theta)).real()) * std::sin(theta) / deg;
  };
  return measure_sup(ratio, 0.0, kPi, points);
}

LowerBoundReport robust_lipschitz_bound(const std::function<double(double)>& f,
                                        const std::vector<double>& samples, double eps,
                                        double delta_max) {
  if (!(delta_max >= 0.0 && delta_max <= 1.0)) {
    throw ValidationError("robust_lipschitz_bound: Delta must lie in [0, 1], got " +
                          format_number(delta_max));
  }
  if (!(eps >= 0.0)) {
    throw ValidationError("robust_lipschitz_bound: eps must be non-negative");
  }
  std::vector<double> s = samples;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() < 2) {
    throw DomainError("robust_lipschitz_bound: need at least two distinct sample points");
  }
  std::vector<double> fv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(std::abs(s[i]) <= delta_max)) {
      throw ValidationError("robust_lipschitz_bound: sample " + format_number(s[i]) +
                            " lies outside [-Delta, Delta]");
    }
    fv[i] = f(s[i]);
    if (!(std::abs(fv[i]) <= 1.0)) {
      throw ValidationError("robust_lipschitz_bound: |f(" + format_number(s[i]) +
                            ")| = " + format_number(std::abs(fv[i])) + " exceeds 1");
    }
  }
  LowerBoundReport r;
  r.witness = {s[0], s[1]};
  double best = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const double q = (std::abs(fv[i] - fv[j]) - 2.0 * eps) / (s[j] - s[i]);
      if (q > best) {
        best = q;
        r.witness = {s[i], s[j]};
      }
    }
  }
  r.bound = std::sqrt(1.0 - delta_max * delta_max) * best;
  r.params = {{"eps", eps}, {"Delta", delta_max}, {"samples", static_cast<double>(s.size())}};
  return r;
}

LowerBoundReport exp_separation(double beta, double delta) {
  if (!(beta >= 1.0)) {
    throw ValidationError("exp_separation: beta must be >= 1, got " + format_number(beta));
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw ValidationError("exp_separation: delta must lie in (0, 1], got " +
                          format_number(delta));
  }
  const double t_hi = (1.0 - delta) / (1.0 + delta);
  const double t_lo = 2.0 / (1.0 + delta) * (-1.0 / beta + (1.0 - delta) / 2.0);
  const double gap = 2.0 / (beta * (1.0 + delta));
  LowerBoundReport r;
  r.bound = (1.0 - std::exp(-1.0) - 2.0 * kSeparationEps) / gap *
            std::sqrt(1.0 - t_hi * t_hi);
  r.witness = {t_lo, t_hi};
  r.params = {{"beta", beta}, {"delta", delta}, {"eps", kSeparationEps}};
  return r;
}

}  // namespace qsvtkit
