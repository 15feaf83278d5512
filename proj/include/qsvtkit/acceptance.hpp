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
#include <functional>
#include <string>
#include <vector>

#include "qsvtkit/config.hpp"

namespace qsvtkit {

/// Outcome of one acceptance criterion.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct SuiteOptions {
  /// Smaller instance counts and sizes; every check keeps its tolerance.
  bool quick = false;
  Config config;
};

inline constexpr int kCriterionCount = 9;

/// Runs criterion `id` (1..9). A criterion fails when any check misses its
/// tolerance or the run exceeds its time budget.
CriterionResult run_criterion(int id, const SuiteOptions& opt);

/// Runs every criterion in order, reporting each result as it completes.
std::vector<CriterionResult> run_suite(
    const SuiteOptions& opt,
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "criterion N: PASS  title  (detail; 1.23 s of 30 s)".
std::string format_result(const CriterionResult& r);

}  // namespace qsvtkit
