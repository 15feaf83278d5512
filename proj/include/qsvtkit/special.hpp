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

#include <complex>

namespace qsvtkit {

/// Largest |Im z| accepted by erf_complex.
inline constexpr double kErfImagLimit = 50.0;

/// Error function of a complex argument.
///
/// Power series near the origin, the Laplace continued fraction for erfc
/// further out. Exactly odd and conjugate-symmetric. Throws DomainError
/// when |Im z| > kErfImagLimit and OverflowError when the value does not fit
/// in a double.
std::complex<double> erf_complex(std::complex<double> z);

/// log |I_n(t)|, the modified Bessel function of the first kind; -inf when
/// I_n(t) = 0. Requires 0 <= n <= 10^4 and |t| <= 10^4.
double log_bessel_i(int n, double t);

/// I_n(t). Throws OverflowError when the value exceeds the double range; use
/// log_bessel_i for a scaled representation.
double bessel_i(int n, double t);

}  // namespace qsvtkit
