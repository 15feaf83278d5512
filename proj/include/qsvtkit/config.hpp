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

#include <cstdint>
#include <string>

#include "qsvtkit/matrix.hpp"

namespace qsvtkit {

/// Run configuration shared by the CLI and the acceptance suite.
struct Config {
  Tolerance tolerances;
  double c_s = 4.0;
  int grid_points = 10000;
  int quadrature_factor = 8;
  std::uint64_t seed = 20260101;

  /// Throws ValidationError unless every field is positive.
  void validate() const;
};

/// Reads `key = value` lines; '#' starts a comment. Keys: unitarity_tol,
/// residual_tol, sv_cluster_tol, c_s, grid_points, quadrature_factor, seed.
/// Unknown keys and malformed values raise ValidationError with the line
/// number.
Config parse_config(const std::string& text, const std::string& source, Config base = {});
Config load_config(const std::string& path, Config base = {});

/// Replaces the seed with QSVTKIT_SEED when that variable is set.
void apply_seed_env(Config& cfg);

}  // namespace qsvtkit
