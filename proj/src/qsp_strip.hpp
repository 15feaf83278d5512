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

#include <vector>

#include "qsvtkit/matrix.hpp"

namespace qsvtkit::detail {

/// Number of extended-precision tiers available to strip_layers_extended.
int strip_tier_count();

/// Bits of mantissa used by `tier`.
int strip_tier_bits(int tier);

/// Smallest tier expected to carry a degree-n pair through stripping.
int strip_tier_for_degree(int n);

/// Layer stripping of the Chebyshev pair (p, q) of degree n, carried out in
/// the extended precision of `tier`. The pair is first projected onto
/// |p|^2 + (1 - x^2)|q|^2 = 1 by a minimum-norm Newton iteration so that the
/// leading coefficients stay consistent through every strip. Returns
/// phi_0, ..., phi_n.
std::vector<double> strip_layers_extended(const std::vector<cplx>& p,
                                          const std::vector<cplx>& q, int n,
                                          int tier);

}  // namespace qsvtkit::detail
