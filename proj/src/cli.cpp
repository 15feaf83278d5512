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

#include "qsvtkit/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "qsvtkit/acceptance.hpp"
#include "qsvtkit/bounded.hpp"
#include "qsvtkit/chebyshev.hpp"
#include "qsvtkit/config.hpp"
#include "qsvtkit/csd.hpp"
#include "qsvtkit/degree_bounds.hpp"
#include "qsvtkit/errors.hpp"
#include "qsvtkit/format.hpp"
#include "qsvtkit/io.hpp"
#include "qsvtkit/qsp.hpp"
#include "qsvtkit/qsvt.hpp"

namespace qsvtkit {

namespace {

// Inline JSON when the argument looks like JSON, otherwise a file path.
Json json_argument(const std::string& arg, const std::string& flag) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
    return parse_json(arg, flag);
  }
  return load_json(arg);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

std::map<std::string, std::string> parse_params(const std::string& spec) {
  std::map<std::string, std::string> m;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ValidationError("--params: expected key=value, got '" + item + "'");
    }
    m[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return m;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw ValidationError(what + ": cannot parse '" + s + "' as a number");
  }
}

std::vector<double> parse_list(const std::string& spec, const std::string& what) {
  std::vector<double> v;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) v.push_back(to_double(item, what));
  }
  return v;
}

double param(const std::map<std::string, std::string>& p, const std::string& key,
             std::optional<double> fallback) {
  const auto it = p.find(key);
  if (it != p.end()) return to_double(it->second, "--params " + key);
  if (!fallback) throw ValidationError("--params: missing '" + key + "'");
  return *fallback;
}

Parity param_parity(const std::map<std::string, std::string>& p) {
  const auto it = p.find("parity");
  if (it == p.end()) return Parity::kEven;
  const Parity par = parse_parity(it->second);
  if (par == Parity::kNone) throw ValidationError("--params parity must be even or odd");
  return par;
}

Json config_json(const Config& cfg) {
  Json o = Json::object();
  o["unitarity_tol"] = cfg.tolerances.unitarity_tol;
  o["residual_tol"] = cfg.tolerances.residual_tol;
  o["sv_cluster_tol"] = cfg.tolerances.sv_cluster_tol;
  o["c_s"] = cfg.c_s;
  o["grid_points"] = cfg.grid_points;
  o["quadrature_factor"] = cfg.quadrature_factor;
  o["seed"] = cfg.seed;
  return o;
}

RealArgFunction named_function(const std::string& fn, double t) {
  if (fn == "exp") return [t](double x) { return cplx(std::exp(t * x), 0.0); };
  if (fn == "cosh") return [t](double x) { return cplx(std::cosh(t * x), 0.0); };
  if (fn == "sinh") return [t](double x) { return cplx(std::sinh(t * x), 0.0); };
  if (fn == "cos") return [t](double x) { return cplx(std::cos(t * x), 0.0); };
  if (fn == "sin") return [t](double x) { return cplx(std::sin(t * x), 0.0); };
  throw ValidationError("--fn: unknown function '" + fn +
                        "' (expected exp, cosh, sinh, cos or sin)");
}

struct Settings {
  std::string config_path;
  std::optional<std::uint64_t> seed;
};

Config resolve_config(const Settings& s) {
  Config cfg;
  if (!s.config_path.empty()) cfg = load_config(s.config_path);
  apply_seed_env(cfg);
  if (s.seed) cfg.seed = *s.seed;
  cfg.validate();
  return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum singular value transformation toolkit", "qsvtkit"};
  app.require_subcommand(1);
  // Lets --config and --seed follow the subcommand as well.
  app.fallthrough();
  Settings settings;
  app.add_option("--config", settings.config_path, "key = value configuration file");
  app.add_option("--seed", settings.seed, "random seed (overrides config and QSVTKIT_SEED)");

  std::function<int(const Config&)> action;

  // csd
  auto* csd = app.add_subcommand("csd", "cosine-sine decomposition of a unitary");
  std::string csd_in, csd_out;
  std::size_t csd_r1 = 0, csd_c1 = 0;
  csd->add_option("--input", csd_in, "unitary matrix JSON")->required();
  csd->add_option("--r1", csd_r1, "rows of the top-left block")->required();
  csd->add_option("--c1", csd_c1, "columns of the top-left block")->required();
  csd->add_option("--out", csd_out, "output JSON (default stdout)");
  csd->callback([&] {
    action = [&](const Config& cfg) {
      const ComplexMatrix u = matrix_from_json(load_json(csd_in), csd_in);
      const CSDecomposition cs = cs_decompose(u, csd_r1, csd_c1, cfg.tolerances);
      double residual = max_abs_diff(cs.d, u);
      if (csd_r1 > 0 && csd_c1 > 0) {
        residual = max_abs_diff(
            blockdiag(cs.v1, cs.v2).adjoint() * u * blockdiag(cs.w1, cs.w2), cs.d);
      }
      Json j = csd_to_json(cs);
      j["residual"] = residual;
      emit(dump_json(j), csd_out, out);
      if (residual > cfg.tolerances.residual_tol) {
        err << "csd: reconstruction residual " << format_number(residual) << " exceeds "
            << format_number(cfg.tolerances.residual_tol) << "\n";
        return int{kExitTolerance};
      }
      return int{kExitOk};
    };
  });

  // qsp
  auto* qsp = app.add_subcommand("qsp", "quantum signal processing");
  qsp->require_subcommand(1);
  auto* qsp_eval_cmd = qsp->add_subcommand("eval", "evaluate U_Phi(x)");
  std::string qsp_phi, qsp_out, qsp_p, qsp_q;
  double qsp_x = 0.0;
  double qsp_tol = 1e-8;
  qsp_eval_cmd->add_option("--phi", qsp_phi, "phases: inline JSON array or file")->required();
  qsp_eval_cmd->add_option("--x", qsp_x, "signal value in [-1, 1]")->required();
  qsp_eval_cmd->add_option("--out", qsp_out, "output JSON (default stdout)");
  qsp_eval_cmd->callback([&] {
    action = [&](const Config&) {
      const PhaseSequence phi = phases_from_json(json_argument(qsp_phi, "--phi"), "--phi");
      emit(dump_json(matrix_to_json(qsp_eval(phi, qsp_x))), qsp_out, out);
      return int{kExitOk};
    };
  });
  auto* qsp_synth_cmd = qsp->add_subcommand("synth", "phases for an achievable pair");
  qsp_synth_cmd->add_option("--p", qsp_p, "polynomial p (JSON)")->required();
  qsp_synth_cmd->add_option("--q", qsp_q,
                            "polynomial q (JSON); without it p is a real target "
                            "completed to an achievable pair");
  qsp_synth_cmd->add_option("--tol", qsp_tol, "roundtrip tolerance");
  qsp_synth_cmd->add_option("--out", qsp_out, "output JSON (default stdout)");
  qsp_synth_cmd->callback([&] {
    action = [&](const Config&) {
      QspPair pair;
      const ChebyshevSeries p = series_from_json(json_argument(qsp_p, "--p"), "--p");
      if (qsp_q.empty()) {
        pair = complete_real(p, ChebyshevSeries({cplx(0.0, 0.0)}));
      } else {
        pair.p = p;
        pair.q = series_from_json(json_argument(qsp_q, "--q"), "--q");
      }
      const PhaseSequence phi = synthesize_phases(pair, qsp_tol);
      emit(dump_json(phases_to_json(phi)), qsp_out, out);
      return int{kExitOk};
    };
  });
  auto* qsp_complete_cmd = qsp->add_subcommand("complete", "complete real parts to a pair");
  qsp_complete_cmd->add_option("--p", qsp_p, "real part of p (JSON)")->required();
  qsp_complete_cmd->add_option("--q", qsp_q, "real part of q (JSON, default 0)");
  qsp_complete_cmd->add_option("--out", qsp_out, "output JSON (default stdout)");
  qsp_complete_cmd->callback([&] {
    action = [&](const Config&) {
      const ChebyshevSeries p = series_from_json(json_argument(qsp_p, "--p"), "--p");
      const ChebyshevSeries q = qsp_q.empty()
                                    ? ChebyshevSeries({cplx(0.0, 0.0)})
                                    : series_from_json(json_argument(qsp_q, "--q"), "--q");
      emit(dump_json(qsp_pair_to_json(complete_real(p, q))), qsp_out, out);
      return int{kExitOk};
    };
  });

  // qsvt
  auto* qsvt = app.add_subcommand("qsvt", "block encodings and singular value transforms");
  qsvt->require_subcommand(1);
  auto* qsvt_encode_cmd = qsvt->add_subcommand("encode", "unitary dilation of a contraction");
  std::string qsvt_in, qsvt_out, qsvt_enc, qsvt_phi;
  std::size_t qsvt_r1 = 0, qsvt_c1 = 0;
  double qsvt_tol = 1e-8;
  qsvt_encode_cmd->add_option("--input", qsvt_in, "matrix A (JSON), ||A|| <= 1")->required();
  qsvt_encode_cmd->add_option("--out", qsvt_out, "output unitary JSON (default stdout)");
  qsvt_encode_cmd->callback([&] {
    action = [&](const Config&) {
      const ComplexMatrix a = matrix_from_json(load_json(qsvt_in), qsvt_in);
      const BlockEncoding be = block_encode(a);
      emit(dump_json(matrix_to_json(be.u)), qsvt_out, out);
      err << "encoded block: --r1 " << a.rows() << " --c1 " << a.cols() << "\n";
      return int{kExitOk};
    };
  });
  auto* qsvt_verify_cmd = qsvt->add_subcommand("verify", "check the QSVT identity");
  qsvt_verify_cmd->add_option("--encoding", qsvt_enc, "unitary U (JSON)")->required();
  qsvt_verify_cmd->add_option("--r1", qsvt_r1, "rows of the encoded block")->required();
  qsvt_verify_cmd->add_option("--c1", qsvt_c1, "columns of the encoded block")->required();
  qsvt_verify_cmd->add_option("--phi", qsvt_phi, "phases: inline JSON array or file")
      ->required();
  qsvt_verify_cmd->add_option("--tol", qsvt_tol, "residual tolerance");
  qsvt_verify_cmd->add_option("--out", qsvt_out, "report JSON (default stdout)");
  qsvt_verify_cmd->callback([&] {
    action = [&](const Config& cfg) {
      const ComplexMatrix u = matrix_from_json(load_json(qsvt_enc), qsvt_enc);
      const BlockEncoding be = computational_encoding(u, qsvt_r1, qsvt_c1, cfg.tolerances);
      const PhaseSequence phi = phases_from_json(json_argument(qsvt_phi, "--phi"), "--phi");
      const QsvtReport rep = verify_qsvt(be, phi);
      emit(dump_json(qsvt_report_to_json(rep, qsvt_tol)), qsvt_out, out);
      if (!(rep.residual <= qsvt_tol)) {
        err << "qsvt verify: residual " << format_number(rep.residual) << " exceeds "
            << format_number(qsvt_tol) << "\n";
        return int{kExitTolerance};
      }
      return int{kExitOk};
    };
  });

  // cheb
  auto* cheb = app.add_subcommand("cheb", "Chebyshev series tools");
  cheb->require_subcommand(1);
  std::string cheb_fn = "exp", cheb_out, cheb_method = "interpolant";
  double cheb_t = 1.0, cheb_eps = 1e-6;
  int cheb_degree = 0;
  auto* cheb_series_cmd = cheb->add_subcommand("series", "Chebyshev coefficients of f(t x)");
  cheb_series_cmd->add_option("--fn", cheb_fn, "exp, cosh, sinh, cos or sin");
  cheb_series_cmd->add_option("--t", cheb_t, "scale t");
  cheb_series_cmd->add_option("--degree", cheb_degree, "degree")->required();
  cheb_series_cmd->add_option("--method", cheb_method, "interpolant or quadrature");
  cheb_series_cmd->add_option("--out", cheb_out, "output JSON (default stdout)");
  cheb_series_cmd->callback([&] {
    action = [&](const Config& cfg) {
      const RealArgFunction f = named_function(cheb_fn, cheb_t);
      ChebyshevSeries s;
      if (cheb_method == "interpolant") {
        s = series_from_interpolant(f, cheb_degree);
      } else if (cheb_method == "quadrature") {
        s = series_from_quadrature(f, cheb_degree, cfg.quadrature_factor);
      } else {
        throw ValidationError("--method: expected interpolant or quadrature");
      }
      emit(dump_json(series_to_json(s)), cheb_out, out);
      return int{kExitOk};
    };
  });
  auto* cheb_degree_cmd =
      cheb->add_subcommand("degree", "truncation degree of e^{tx} for uniform error eps");
  cheb_degree_cmd->add_option("--fn", cheb_fn, "exp");
  cheb_degree_cmd->add_option("--t", cheb_t, "scale t")->required();
  cheb_degree_cmd->add_option("--eps", cheb_eps, "uniform error")->required();
  cheb_degree_cmd->add_option("--out", cheb_out, "output JSON (default stdout)");
  cheb_degree_cmd->callback([&] {
    action = [&](const Config&) {
      if (cheb_fn != "exp") throw ValidationError("cheb degree: only --fn exp is supported");
      Json j = Json::object();
      j["t"] = cheb_t;
      j["eps"] = cheb_eps;
      j["degree"] = exp_truncation_degree(cheb_t, cheb_eps);
      j["regime"] = exp_regime(cheb_t, cheb_eps);
      j["regime_formula"] = exp_regime_formula(cheb_t, cheb_eps);
      emit(dump_json(j), cheb_out, out);
      return int{kExitOk};
    };
  });

  // approx
  auto* approx = app.add_subcommand("approx", "bounded polynomial approximations");
  std::string ap_target, ap_params, ap_out, ap_sweep;
  double ap_eps = 1e-4;
  bool ap_no_threshold = false;
  auto* sweep_opt = approx->add_option("--sweep", ap_sweep,
                                       "comma-separated values of the primary parameter "
                                       "(beta, delta, eps, delta, delta); writes CSV")
                        ->expected(0, 1);
  approx->add_option("--target", ap_target, "exp, arcsin, trig-arcsin, neg-power or sign")
      ->required();
  approx->add_option("--params", ap_params, "key=value list, e.g. beta=30 or c=1,delta=0.1");
  approx->add_option("--eps", ap_eps, "target accuracy");
  approx->add_flag("--no-threshold", ap_no_threshold,
                   "skip the erf threshold (negative control)");
  approx->add_option("--out", ap_out, "output JSON or CSV (default stdout)");
  approx->callback([&] {
    action = [&](const Config& cfg) {
      BoundedOptions bo;
      bo.c_s = cfg.c_s;
      bo.grid_points = cfg.grid_points;
      bo.threshold = !ap_no_threshold;
      const auto p = parse_params(ap_params);
      if (sweep_opt->count() > 0) {
        std::vector<std::pair<std::string, double>> fixed;
        for (const auto& [k, v] : p) {
          fixed.emplace_back(k, k == "parity" ? (parse_parity(v) == Parity::kEven ? 0.0 : 1.0)
                                              : to_double(v, "--params " + k));
        }
        if (ap_target != "trig-arcsin" && p.find("eps") == p.end()) {
          fixed.emplace_back("eps", ap_eps);
        }
        const auto rows = approx_sweep(ap_target, parse_list(ap_sweep, "--sweep"), fixed, bo);
        emit(sweep_csv(ap_target, rows), ap_out, out);
        for (const auto& r : rows) {
          if (!r.passes) return int{kExitTolerance};
        }
        return int{kExitOk};
      }
      Json j;
      bool ok = true;
      if (ap_target == "trig-arcsin") {
        const auto [c, s] = approx_trig_arcsin(param(p, "t", 1.0), ap_eps, bo);
        j = Json::object();
        j["cos"] = certificate_to_json(c);
        j["sin"] = certificate_to_json(s);
        ok = c.passes() && s.passes();
      } else {
        BoundedApproxCertificate c;
        if (ap_target == "exp") {
          c = approx_exp_bounded(param(p, "beta", std::nullopt), ap_eps, bo);
        } else if (ap_target == "arcsin") {
          c = approx_arcsin(param(p, "delta", std::nullopt), ap_eps, bo);
        } else if (ap_target == "neg-power") {
          c = approx_neg_power(param(p, "c", 1.0), param(p, "delta", std::nullopt), ap_eps,
                               param_parity(p), bo);
        } else if (ap_target == "sign") {
          c = approx_sign(param(p, "delta", std::nullopt), ap_eps, bo);
        } else {
          throw ValidationError("--target: unknown target '" + ap_target +
                                "' (expected exp, arcsin, trig-arcsin, neg-power or sign)");
        }
        j = certificate_to_json(c);
        ok = c.passes();
      }
      j["eps"] = ap_eps;
      j["config"] = config_json(cfg);
      emit(dump_json(j), ap_out, out);
      if (!ok) {
        err << "approx: certificate exceeds a window bound\n";
        return int{kExitTolerance};
      }
      return int{kExitOk};
    };
  });

  // lowerbound
  auto* lb = app.add_subcommand("lowerbound", "degree lower bounds");
  lb->require_subcommand(1);
  std::string lb_out, lb_poly;
  double lb_beta = 1.0, lb_delta = 1.0;
  auto* lb_sep = lb->add_subcommand("exp-separation", "bounded exp approximation bound");
  lb_sep->add_option("--beta", lb_beta, "beta >= 1")->required();
  lb_sep->add_option("--delta", lb_delta, "delta in (0, 1]")->required();
  lb_sep->add_option("--out", lb_out, "output JSON (default stdout)");
  lb_sep->callback([&] {
    action = [&](const Config&) {
      emit(dump_json(lower_bound_to_json(exp_separation(lb_beta, lb_delta))), lb_out, out);
      return int{kExitOk};
    };
  });
  auto* lb_bern = lb->add_subcommand("bernstein", "Bernstein ratio of a bounded polynomial");
  lb_bern->add_option("--p", lb_poly, "polynomial (JSON)")->required();
  lb_bern->add_option("--out", lb_out, "output JSON (default stdout)");
  lb_bern->callback([&] {
    action = [&](const Config& cfg) {
      const ChebyshevSeries p = series_from_json(json_argument(lb_poly, "--p"), "--p");
      Json j = Json::object();
      j["degree"] = p.degree();
      j["ratio"] = bernstein_check(p, cfg.grid_points);
      emit(dump_json(j), lb_out, out);
      return int{kExitOk};
    };
  });

  // suite
  auto* suite = app.add_subcommand("suite", "run the acceptance criteria");
  bool suite_quick = false;
  suite->add_flag("--quick", suite_quick, "reduced instance counts");
  suite->callback([&] {
    action = [&](const Config& cfg) {
      SuiteOptions so;
      so.quick = suite_quick;
      so.config = cfg;
      bool all = true;
      run_suite(so, [&](const CriterionResult& r) {
        out << format_result(r) << "\n";
        out.flush();
        all = all && r.pass;
      });
      return int{all ? kExitOk : kExitTolerance};
    };
  });

  // CLI11 consumes arguments in reverse order, without the program name.
  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (!action) {
      err << app.help();
      return kExitValidation;
    }
    return action(resolve_config(settings));
  } catch (const NotAchievableError& e) {
    err << "error: " << e.what() << " (residual " << format_number(e.residual()) << ")\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ToleranceError& e) {
    err << "error: " << e.what() << " (residual " << format_number(e.residual()) << ")\n";
    return kExitTolerance;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace qsvtkit
