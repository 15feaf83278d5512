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

#include <string>

#include <json.hpp>

#include "qsvtkit/bounded.hpp"
#include "qsvtkit/chebyshev.hpp"
#include "qsvtkit/csd.hpp"
#include "qsvtkit/degree_bounds.hpp"
#include "qsvtkit/errors.hpp"
#include "qsvtkit/matrix.hpp"
#include "qsvtkit/qsp.hpp"
#include "qsvtkit/qsvt.hpp"

namespace qsvtkit {

using Json = nlohmann::ordered_json;

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Parses JSON text; ValidationError carries `source` and the byte offset.
Json parse_json(const std::string& text, const std::string& source);
Json load_json(const std::string& path);
/// Two-space indented JSON with a trailing newline.
std::string dump_json(const Json& j);

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, const std::string& where);

Json complex_array(const std::vector<cplx>& v);
std::vector<cplx> complex_array_from_json(const Json& j, const std::string& where);

/// {"basis": "chebyshev", "parity": ..., "coeffs": [[re, im], ...]}.
Json series_to_json(const ChebyshevSeries& s);
/// Accepts either basis; monomial input is converted to Chebyshev form.
/// The parity field is optional and defaults to the parity of the support.
ChebyshevSeries series_from_json(const Json& j, const std::string& where);

/// Either a bare array of phases or {"phases": [...]}.
Json phases_to_json(const PhaseSequence& phi);
PhaseSequence phases_from_json(const Json& j, const std::string& where);

Json qsp_pair_to_json(const QspPair& pair);
Json csd_to_json(const CSDecomposition& c);
Json qsvt_report_to_json(const QsvtReport& r, double tolerance);
Json certificate_to_json(const BoundedApproxCertificate& c);
Json lower_bound_to_json(const LowerBoundReport& r);

}  // namespace qsvtkit
