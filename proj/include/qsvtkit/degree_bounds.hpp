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
#include <string>
#include <utility>
#include <vector>

#include "qsvtkit/chebyshev.hpp"

namespace qsvtkit {

/// Degree lower bound with the sample pair that attains it.
struct LowerBoundReport {
  double bound = 0.0;
  std::pair<double, double> witness{0.0, 0.0};
  std::vector<std::pair<std::string, double>> params;
};

/// max |p'(x)| sqrt(1 - x^2) / deg p over a grid x = cos(theta), refined
/// around the largest samples. The derivative is taken on the coefficients.
/// Returns 0 for constants. Throws ValidationError, naming the grid point,
/// when |p| exceeds 1 + 1e-10 on [-1, 1], or when p has a non-real
/// coefficient.
double bernstein_check(const ChebyshevSeries& p, int grid_points = 10000);

/// sqrt(1 - Delta^2) max_{x != y in S} (|f(x) - f(y)| - 2 eps) / |x - y|,
/// clipped at 0: the least degree of any polynomial within eps of f on S and
/// bounded by 1 on [-1, 1]. Throws DomainError when S has fewer than two
/// distinct points and ValidationError when S leaves [-Delta, Delta],
/// Delta > 1, eps < 0 or |f| > 1 on S.
LowerBoundReport robust_lipschitz_bound(const std::function<double(double)>& f,
                                        const std::vector<double>& samples, double eps,
                                        double delta_max);

/// Degree lower bound for approximating e^{beta x} on [-1, 0] while staying
/// bounded on [-1, delta], from the two-point witness
/// t = (1 - delta) / (1 + delta) - 2 / (beta (1 + delta)) and
/// t = (1 - delta) / (1 + delta) with eps = 0.1. Throws ValidationError
/// for beta < 1 or delta outside (0, 1].
LowerBoundReport exp_separation(double beta, double delta);

}  // namespace qsvtkit
