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

#include "qsvtkit/config.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "qsvtkit/errors.hpp"
#include "qsvtkit/io.hpp"

namespace qsvtkit {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_value(const std::string& v, const std::string& where) {
  T out{};
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError(where + ": cannot parse '" + v + "'");
  }
  return out;
}

}  // namespace

void Config::validate() const {
  tolerances.validate();
  if (!(c_s > 0.0)) throw ValidationError("config: c_s must be positive");
  if (grid_points <= 1) throw ValidationError("config: grid_points must exceed 1");
  if (quadrature_factor <= 0) throw ValidationError("config: quadrature_factor must be positive");
}

Config parse_config(const std::string& text, const std::string& source, Config cfg) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ValidationError(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (key == "unitarity_tol") {
      cfg.tolerances.unitarity_tol = parse_value<double>(value, where);
    } else if (key == "residual_tol") {
      cfg.tolerances.residual_tol = parse_value<double>(value, where);
    } else if (key == "sv_cluster_tol") {
      cfg.tolerances.sv_cluster_tol = parse_value<double>(value, where);
    } else if (key == "c_s") {
      cfg.c_s = parse_value<double>(value, where);
    } else if (key == "grid_points") {
      cfg.grid_points = parse_value<int>(value, where);
    } else if (key == "quadrature_factor") {
      cfg.quadrature_factor = parse_value<int>(value, where);
    } else if (key == "seed") {
      cfg.seed = parse_value<std::uint64_t>(value, where);
    } else {
      throw ValidationError(where + ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

Config load_config(const std::string& path, Config base) {
  return parse_config(read_file(path), path, base);
}

void apply_seed_env(Config& cfg) {
  const char* s = std::getenv("QSVTKIT_SEED");
  if (s == nullptr || *s == '\0') return;
  cfg.seed = parse_value<std::uint64_t>(trim(s), "QSVTKIT_SEED");
}

}  // namespace qsvtkit
