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

#include "qsvtkit/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qsvtkit {

namespace {

double number_at(const Json& j, const std::string& where) {
  if (!j.is_number()) throw ValidationError(where + ": expected a number");
  return j.get<double>();
}

Json windows_to_json(const std::vector<Window>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(Json::array({w.lo, w.hi}));
  return a;
}

Json params_to_json(const std::vector<std::pair<std::string, double>>& params) {
  Json o = Json::object();
  for (const auto& [k, v] : params) o[k] = v;
  return o;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("error while writing '" + path + "'");
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(source + ": JSON parse error at byte " + std::to_string(e.byte) +
                          ": " + e.what());
  }
}

Json load_json(const std::string& path) { return parse_json(read_file(path), path); }

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json complex_array(const std::vector<cplx>& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(Json::array({z.real(), z.imag()}));
  return a;
}

std::vector<cplx> complex_array_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array of [re, im] pairs");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const Json& e = j[i];
    if (e.is_number()) {
      out.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      out.emplace_back(number_at(e[0], at + "[0]"), number_at(e[1], at + "[1]"));
    } else {
      throw ValidationError(at + ": expected [re, im] or a real number");
    }
  }
  return out;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json o = Json::object();
  o["rows"] = m.rows();
  o["cols"] = m.cols();
  o["data"] = complex_array(m.data());
  return o;
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected a matrix object");
  for (const char* key : {"rows", "cols", "data"}) {
    if (!j.contains(key)) throw ValidationError(where + ": missing field '" + key + "'");
  }
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
    throw ValidationError(where + ": rows and cols must be non-negative integers");
  }
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  auto data = complex_array_from_json(j["data"], where + ".data");
  if (data.size() != rows * cols) {
    throw ValidationError(where + ".data: expected " + std::to_string(rows * cols) +
                          " entries, found " + std::to_string(data.size()));
  }
  ComplexMatrix m(rows, cols, std::move(data));
  if (!m.all_finite()) throw ValidationError(where + ": non-finite entry");
  return m;
}

Json series_to_json(const ChebyshevSeries& s) {
  Json o = Json::object();
  o["basis"] = "chebyshev";
  o["parity"] = parity_name(s.parity);
  o["coeffs"] = complex_array(s.coeffs);
  return o;
}

ChebyshevSeries series_from_json(const Json& j, const std::string& where) {
  if (j.is_array()) return ChebyshevSeries(complex_array_from_json(j, where));
  if (!j.is_object() || !j.contains("coeffs")) {
    throw ValidationError(where + ": expected a polynomial object with 'coeffs'");
  }
  auto coeffs = complex_array_from_json(j["coeffs"], where + ".coeffs");
  if (coeffs.empty()) throw ValidationError(where + ".coeffs: empty coefficient list");
  std::string basis = "chebyshev";
  if (j.contains("basis")) {
    if (!j["basis"].is_string()) throw ValidationError(where + ".basis: expected a string");
    basis = j["basis"].get<std::string>();
  }
  Parity parity = detect_parity(coeffs);
  if (j.contains("parity") && !j["parity"].is_null()) {
    if (!j["parity"].is_string()) throw ValidationError(where + ".parity: expected a string");
    parity = parse_parity(j["parity"].get<std::string>());
  }
  ChebyshevSeries s;
  if (basis == "chebyshev") {
    s = ChebyshevSeries(std::move(coeffs), parity);
  } else if (basis == "monomial") {
    s = ChebyshevSeries::from_monomial(coeffs, parity);
  } else {
    throw ValidationError(where + ".basis: expected 'monomial' or 'chebyshev', got '" +
                          basis + "'");
  }
  s.check_parity(1e-12);
  return s;
}

Json phases_to_json(const PhaseSequence& phi) {
  Json o = Json::object();
  o["phases"] = phi.phases;
  return o;
}

PhaseSequence phases_from_json(const Json& j, const std::string& where) {
  const Json* arr = &j;
  std::string at = where;
  if (j.is_object()) {
    if (!j.contains("phases")) throw ValidationError(where + ": missing field 'phases'");
    arr = &j["phases"];
    at += ".phases";
  }
  if (!arr->is_array()) throw ValidationError(at + ": expected an array of phases");
  std::vector<double> phases;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    phases.push_back(number_at((*arr)[i], at + "[" + std::to_string(i) + "]"));
  }
  PhaseSequence phi(std::move(phases));
  phi.validate();
  return phi;
}

Json qsp_pair_to_json(const QspPair& pair) {
  Json o = Json::object();
  o["p"] = series_to_json(pair.p);
  o["q"] = series_to_json(pair.q);
  return o;
}

Json csd_to_json(const CSDecomposition& c) {
  Json o = Json::object();
  Json s = Json::object();
  s["n_zero"] = c.structure.n_zero;
  s["n_mid"] = c.structure.n_mid;
  s["n_one"] = c.structure.n_one;
  s["cos"] = c.structure.cos_values;
  s["sin"] = c.structure.sin_values;
  o["structure"] = s;
  o["v1"] = matrix_to_json(c.v1);
  o["v2"] = matrix_to_json(c.v2);
  o["w1"] = matrix_to_json(c.w1);
  o["w2"] = matrix_to_json(c.w2);
  o["d"] = matrix_to_json(c.d);
  return o;
}

Json qsvt_report_to_json(const QsvtReport& r, double tolerance) {
  Json o = Json::object();
  o["degree"] = r.degree;
  o["parity"] = parity_name(r.parity);
  o["residual"] = r.residual;
  o["tolerance"] = tolerance;
  o["pass"] = r.residual <= tolerance;
  return o;
}

Json certificate_to_json(const BoundedApproxCertificate& c) {
  Json o = Json::object();
  o["target"] = c.target;
  o["degree"] = c.degree;
  o["formula_degree"] = c.formula_degree;
  o["scale"] = c.scale;
  o["polynomial"] = series_to_json(c.poly);
  Json st = Json::object();
  st["inner_degree"] = c.inner_degree;
  st["trefethen_degree"] = c.trefethen_degree;
  st["tail_degree"] = c.tail_degree;
  st["ellipse_max"] = c.ellipse_max;
  st["threshold_mu"] = c.threshold.mu;
  st["threshold_s"] = c.threshold.s;
  st["c_s"] = c.threshold.c_s;
  o["stages"] = st;
  Json w = Json::object();
  auto window = [&](const char* name, const std::vector<Window>& ws, double bound,
                    double sup) {
    Json e = Json::object();
    e["intervals"] = windows_to_json(ws);
    e["bound"] = bound;
    e["sup"] = sup;
    w[name] = e;
  };
  window("inner", c.inner, c.bound_inner, c.sup_inner);
  window("bounded", c.bounded, c.bound_bounded, c.sup_bounded);
  window("outer", c.outer, c.bound_outer, c.sup_outer);
  o["windows"] = w;
  o["grid_points"] = c.grid_points;
  o["pass"] = c.passes();
  return o;
}

Json lower_bound_to_json(const LowerBoundReport& r) {
  Json o = Json::object();
  o["bound"] = r.bound;
  o["witness"] = Json::array({r.witness.first, r.witness.second});
  o["params"] = params_to_json(r.params);
  return o;
}

}  // namespace qsvtkit
