// Copyright 2026 The radtoep Authors.
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


#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "radtoep/approximation.hpp"
#include "radtoep/berezin.hpp"
#include "radtoep/errors.hpp"
#include "radtoep/io.hpp"
#include "radtoep/laplacian.hpp"
#include "radtoep/moments.hpp"
#include "radtoep/parallel.hpp"
#include "radtoep/sequences.hpp"
#include "radtoep/spectrum.hpp"

namespace radtoep::cli {

namespace {

using io::Json;

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::vector<double> parse_number_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const char* first = item.data();
    const char* last = first + item.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
      throw ParseError(flag + ": bad number '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw ParseError(flag + ": expected a comma-separated list of numbers");
  return out;
}

struct Output {
  std::ostream& out;

  void json(const Json& j, const std::string& path) const {
    if (path.empty()) {
      out << j.dump(2) << '\n';
    } else {
      io::write_json_file(path, j);
    }
  }

  // Sequences go to CSV when the path ends in .csv (or when no path is given
  // and csv_by_default is set), otherwise to JSON carrying the report keys.
  void sequence(std::span<const Complex> values, Json report, const std::string& path, bool csv_by_default) const {
    const bool csv = path.empty() ? csv_by_default : has_suffix(path, ".csv");
    if (csv) {
      if (path.empty()) {
        io::write_sequence_csv(out, values);
        return;
      }
      std::ofstream file(path);
      if (!file) throw ParseError(path + ": cannot open file for writing");
      io::write_sequence_csv(file, values);
      return;
    }
    report["values"] = io::to_json(values)["values"];
    json(report, path);
  }
};

void add_quadrature_options(CLI::App* cmd, QuadratureConfig& q) {
  cmd->add_option("--nodes", q.nodes_per_panel, "Gauss-Legendre nodes per panel")->check(CLI::Range(2, 512));
  cmd->add_option("--abs-tol", q.abs_tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-panels", q.max_panels, "Panel budget per integral")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial Toeplitz operators on the Bergman space: eigenvalues, seminorms, Berezin transforms"};
  app.name("radtoep");
  app.require_subcommand(1);

  unsigned threads = 0;
  bool strict_window = false;
  app.add_option("--threads", threads, "Worker thread cap (0 = hardware concurrency)");
  app.add_flag("--strict-window", strict_window, "Treat eigenvalue-window extension as an error");

  // Shared option storage; each subcommand binds what it needs.
  std::string symbol_path, input_path, lambda_path, gamma_path, path_path, out_path, report_path;
  std::string radii_text = "0,0.3,0.6,0.9";
  std::string lambda0_text = "0";
  std::size_t count = 0;
  double epsilon = 0.0;
  int k = 0;
  int k_max = 30;
  double tol = 0.0;
  int grid = 96;
  double speed = 1.0;
  double tail = 0.5;
  double cluster_tol = 0.05;
  std::optional<double> gap_tol;
  std::optional<int> hausdorff_m;
  std::optional<int> hausdorff_k;
  QuadratureConfig quad;

  auto* eig = app.add_subcommand("eig", "Eigenvalues of the Toeplitz operator of a radial symbol");
  eig->add_option("--symbol", symbol_path, "Symbol JSON")->required();
  eig->add_option("--n", count, "Window length")->required()->check(CLI::PositiveNumber);
  eig->add_option("--out", out_path, "Output (.csv or .json); CSV on stdout if omitted");
  eig->add_option("--report", report_path, "Optional JSON report");
  add_quadrature_options(eig, quad);

  auto* seminorms = app.add_subcommand("seminorms", "Window sup norm, d1 and d2 seminorms");
  seminorms->add_option("--input", input_path, "Sequence (.json or .csv)")->required();
  seminorms->add_option("--hausdorff-m", hausdorff_m, "Also report the Hausdorff grid max up to this m")
      ->check(CLI::NonNegativeNumber);
  seminorms->add_option("--hausdorff-k", hausdorff_k, "k range of the Hausdorff grid")->check(CLI::NonNegativeNumber);
  seminorms->add_option("--out", out_path, "JSON report path");

  auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff condition grid H(m,k)");
  hausdorff->add_option("--input", input_path, "Sequence (.json or .csv)")->required();
  hausdorff->add_option("--m-max", hausdorff_m, "Largest m (default 2)")->check(CLI::NonNegativeNumber);
  hausdorff->add_option("--k-max", hausdorff_k, "Largest k (default N-1)")->check(CLI::NonNegativeNumber);
  hausdorff->add_option("--out", out_path, "JSON report path");

  auto* project = app.add_subcommand("project-d2", "Greedy approximation by a sequence with bounded d2");
  project->add_option("--eps", epsilon, "Target epsilon")->required()->check(CLI::PositiveNumber);
  project->add_option("--input", input_path, "Sequence (.json or .csv)")->required();
  project->add_option("--output,--out", out_path, "JSON result path");

  auto* gamma = app.add_subcommand("gamma", "Invariant-Laplacian sequence gamma of lambda");
  gamma->add_option("--lambda", lambda_path, "Eigenvalue sequence (.json or .csv)")->required();
  gamma->add_option("--out", out_path, "Output (.json or .csv)");

  auto* gamma_inverse = app.add_subcommand("gamma-inverse", "Reconstruct lambda from gamma and lambda_0");
  gamma_inverse->add_option("--gamma", gamma_path, "Gamma sequence JSON")->required();
  gamma_inverse->add_option("--lambda0", lambda0_text, "lambda_0 as re or re,im")->required();
  gamma_inverse->add_option("--out", out_path, "Output (.json or .csv)");

  auto* berezin = app.add_subcommand("berezin", "Series profile of the k-Berezin transform");
  berezin->add_option("--lambda", lambda_path, "Eigenvalue sequence (.json or .csv)")->required();
  berezin->add_option("--k", k, "Transform order")->check(CLI::NonNegativeNumber);
  berezin->add_option("--radii", radii_text, "Comma-separated radii in [0, 0.995]");
  berezin->add_option("--tol", tol, "Series truncation tolerance (default 1e-13)")->check(CLI::PositiveNumber);
  berezin->add_option("--out", out_path, "JSON report path");

  auto* iterate = app.add_subcommand("iterate", "Convergence sweep of Berezin iterates k = 0..kmax");
  iterate->add_option("--lambda", lambda_path, "Eigenvalue sequence (.json or .csv)")->required();
  iterate->add_option("--kmax", k_max, "Largest k")->check(CLI::Range(1, 4096));
  iterate->add_option("--n", count, "Output window (default 50)")->check(CLI::PositiveNumber);
  iterate->add_option("--tol", tol, "Window-extension tolerance (default 1e-10)")->check(CLI::PositiveNumber);
  iterate->add_option("--out", out_path, "JSON report path");

  auto* lcon = app.add_subcommand("lcon-check", "Growth constant of a symbol and the corollary bounds");
  lcon->add_option("--symbol", symbol_path, "Symbol JSON")->required();
  lcon->add_option("--n", count, "Eigenvalue window (default 500)")->check(CLI::Range(3, 100000000));
  lcon->add_option("--grid", grid, "Number of geometric grid points")->check(CLI::Range(2, 2000));
  lcon->add_option("--out", out_path, "JSON report path");
  add_quadrature_options(lcon, quad);

  auto* spectrum_gen = app.add_subcommand("spectrum-gen", "Sequence whose limit set is a given polyline");
  spectrum_gen->add_option("--path", path_path, "Path JSON")->required();
  spectrum_gen->add_option("--n", count, "Window length")->required()->check(CLI::Range(2, 1000000000));
  spectrum_gen->add_option("--speed", speed, "Step scale; the d1 seminorm stays below it")->check(CLI::PositiveNumber);
  spectrum_gen->add_option("--out", out_path, "Output (.json or .csv)");

  auto* spectrum_limits = app.add_subcommand("spectrum-limits", "Clustered limit points of a sequence tail");
  spectrum_limits->add_option("--lambda", lambda_path, "Sequence (.json or .csv)")->required();
  spectrum_limits->add_option("--tail", tail, "Tail fraction in (0, 1]")->check(CLI::Range(0.0, 1.0));
  spectrum_limits->add_option("--tol", cluster_tol, "Cluster radius")->check(CLI::PositiveNumber);
  spectrum_limits->add_option("--gap-tol", gap_tol, "Gap for the connectedness check (default 2*tol)")
      ->check(CLI::PositiveNumber);
  spectrum_limits->add_option("--out", out_path, "JSON report path");

  std::set<std::string> names;
  for (const auto* sub : app.get_subcommands({})) names.insert(sub->get_name());
  bool wants_help = false;
  bool named = false;
  for (const auto& a : args) {
    if (a == "-h" || a == "--help") wants_help = true;
    if (names.count(a)) named = true;
  }
  if (!named && !wants_help) {
    err << app.help();
    return kUsage;
  }

  std::vector<const char*> argv{"radtoep"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "radtoep: " << e.what() << '\n';
    return kValidation;
  }

  const Output output{out};
  set_max_threads(threads);
  auto config = [&](const CLI::App* cmd) {
    Json c{{"subcommand", cmd->get_name()}, {"threads", max_threads()}, {"strict_window", strict_window}};
    return c;
  };

  try {
    if (eig->parsed()) {
      const RadialSymbol b = io::symbol_from_json(io::read_json_file(symbol_path), symbol_path);
      const EigenvalueSequence lambda = eigenvalues_of_symbol(b, count, quad);
      Json report{{"config", config(eig)}, {"sup_norm", sup_norm_estimate(lambda)}};
      report["config"]["symbol"] = io::to_json(b);
      report["config"]["symbol_path"] = symbol_path;
      report["config"]["n"] = count;
      report["config"]["quadrature"] = io::to_json(quad);
      output.sequence(lambda.values(), report, out_path, true);
      if (!report_path.empty()) output.json(report, report_path);
      return kSuccess;
    }

    if (seminorms->parsed()) {
      const EigenvalueSequence x = io::read_sequence_file(input_path);
      if (hausdorff_k && !hausdorff_m) throw DomainError("--hausdorff-k needs --hausdorff-m");
      Json report = io::to_json(seminorm_report(x, hausdorff_m, hausdorff_k));
      report["config"] = config(seminorms);
      report["config"]["input"] = input_path;
      report["config"]["hausdorff_m"] = hausdorff_m ? Json(*hausdorff_m) : Json(nullptr);
      report["config"]["hausdorff_k"] = hausdorff_k ? Json(*hausdorff_k) : Json(nullptr);
      output.json(report, out_path);
      return kSuccess;
    }

    if (hausdorff->parsed()) {
      const EigenvalueSequence x = io::read_sequence_file(input_path);
      const int m_max = hausdorff_m.value_or(2);
      const int k_top = hausdorff_k.value_or(static_cast<int>(x.size()) - 1);
      Json report = io::to_json(hausdorff_grid(x, m_max, k_top));
      report["config"] = config(hausdorff);
      report["config"]["input"] = input_path;
      report["config"]["m_max"] = m_max;
      report["config"]["k_max"] = k_top;
      output.json(report, out_path);
      return kSuccess;
    }

    if (project->parsed()) {
      const EigenvalueSequence x = io::read_sequence_file(input_path);
      const ApproximationResult result = project_to_d2(x, epsilon);
      const ApproximationAudit audit = verify_approximation(x, result);
      Json report = io::to_json(result, audit);
      report["config"] = config(project);
      report["config"]["input"] = input_path;
      report["config"]["eps"] = epsilon;
      output.json(report, out_path);
      if (!result.audits_pass() || !audit.passed()) {
        err << "radtoep: approximation audit failed\n";
        return kAssertion;
      }
      return kSuccess;
    }

    if (gamma->parsed()) {
      const EigenvalueSequence lambda = io::read_sequence_file(lambda_path);
      const GammaSequence g = gamma_of_lambda(lambda);
      Json report{{"config", config(gamma)}};
      report["config"]["lambda"] = lambda_path;
      report["lambda0"] = Json::array({lambda[0].real(), lambda[0].imag()});
      bool violated = false;
      if (lambda.size() >= 3) {
        const NormEquivalenceReport eq = norm_equivalence_check(lambda);
        report["norm_equivalence"] = io::to_json(eq);
        violated = eq.status == EquivalenceStatus::kViolated || !eq.telescoping_bound_holds;
      }
      output.sequence(g.values(), report, out_path, false);
      if (violated) {
        err << "radtoep: norm equivalence violated inside the window\n";
        return kAssertion;
      }
      return kSuccess;
    }

    if (gamma_inverse->parsed()) {
      const GammaSequence g = io::gamma_from_json(io::read_json_file(gamma_path), gamma_path);
      const std::vector<double> parts = parse_number_list(lambda0_text, "--lambda0");
      if (parts.size() > 2) throw ParseError("--lambda0: expected re or re,im");
      const Complex lambda0(parts[0], parts.size() == 2 ? parts[1] : 0.0);
      const EigenvalueSequence lambda = lambda_of_gamma(g, lambda0);
      Json report{{"config", config(gamma_inverse)}};
      report["config"]["gamma"] = gamma_path;
      report["config"]["lambda0"] = Json::array({lambda0.real(), lambda0.imag()});
      output.sequence(lambda.values(), report, out_path, false);
      return kSuccess;
    }

    if (berezin->parsed()) {
      const EigenvalueSequence lambda = io::read_sequence_file(lambda_path);
      const std::vector<double> radii = parse_number_list(radii_text, "--radii");
      const double series_tol = tol > 0.0 ? tol : 1e-13;
      const BerezinProfile profile = berezin_of_radial_operator(lambda, k, series_tol, strict_window);
      if (profile.window_extended) {
        err << "radtoep: warning: series of order " << profile.order() << " reads past the window of "
            << profile.window << " eigenvalues; extended by the last value\n";
      }
      Json rows = Json::array();
      for (double r : radii) {
        const Complex v = profile(r);
        const Complex lap = profile.invariant_laplacian(r);
        rows.push_back(Json{{"r", r}, {"value", {v.real(), v.imag()}}, {"invariant_laplacian", {lap.real(), lap.imag()}}});
      }
      Json report{{"config", config(berezin)},
                  {"order", profile.order()},
                  {"tail_bound", profile.tail_bound},
                  {"r_max", kBerezinRMax},
                  {"window", profile.window},
                  {"window_extended", profile.window_extended},
                  {"rows", std::move(rows)}};
      report["config"]["lambda"] = lambda_path;
      report["config"]["k"] = k;
      report["config"]["radii"] = radii;
      report["config"]["tol"] = series_tol;
      output.json(report, out_path);
      return kSuccess;
    }

    if (iterate->parsed()) {
      const EigenvalueSequence lambda = io::read_sequence_file(lambda_path);
      const std::size_t window = count > 0 ? count : 50;
      const double window_tol = tol > 0.0 ? tol : 1e-10;
      const ConvergenceReport conv = convergence_report(lambda, k_max, window, window_tol, strict_window);
      Json report = io::to_json(conv);
      report["config"] = config(iterate);
      report["config"]["lambda"] = lambda_path;
      report["config"]["kmax"] = k_max;
      report["config"]["n"] = window;
      report["config"]["tol"] = window_tol;
      output.json(report, out_path);
      if (conv.contraction_excess > 10.0 * window_tol) {
        err << "radtoep: iterate norm exceeds the input norm\n";
        return kAssertion;
      }
      return kSuccess;
    }

    if (lcon->parsed()) {
      const RadialSymbol b = io::symbol_from_json(io::read_json_file(symbol_path), symbol_path);
      const std::size_t window = count > 0 ? count : 500;
      const CorollaryReport corollary = corollary_bounds_check(b, window, quad, grid);
      Json report{{"config", config(lcon)},
                  {"lcon", io::to_json(lcon_constant(b, grid, quad))},
                  {"corollary", io::to_json(corollary)}};
      report["config"]["symbol"] = io::to_json(b);
      report["config"]["symbol_path"] = symbol_path;
      report["config"]["n"] = window;
      report["config"]["grid"] = grid;
      report["config"]["quadrature"] = io::to_json(quad);
      output.json(report, out_path);
      if (!corollary.passed()) {
        for (const auto& f : corollary.failures) err << "radtoep: " << f << '\n';
        return kAssertion;
      }
      return kSuccess;
    }

    if (spectrum_gen->parsed()) {
      const SpectrumPath path = io::path_from_json(io::read_json_file(path_path), path_path);
      const EigenvalueSequence lambda = sequence_from_path(path, count, speed);
      const WindowMax d1 = d1_seminorm(lambda);
      Json report{{"config", config(spectrum_gen)}, {"d1", d1.value}, {"d1_argmax", d1.argmax}};
      report["config"]["path"] = io::to_json(path);
      report["config"]["n"] = count;
      report["config"]["speed"] = speed;
      output.sequence(lambda.values(), report, out_path, false);
      if (d1.value > speed) {
        err << "radtoep: generated sequence exceeds the d1 budget\n";
        return kAssertion;
      }
      return kSuccess;
    }

    if (spectrum_limits->parsed()) {
      const EigenvalueSequence lambda = io::read_sequence_file(lambda_path);
      const LimitSet limits = limit_points(lambda, tail, cluster_tol);
      const double gap = gap_tol.value_or(2.0 * cluster_tol);
      Json report = io::to_json(limits);
      report["connected"] = connectedness_check(limits.representatives, gap);
      report["config"] = config(spectrum_limits);
      report["config"]["lambda"] = lambda_path;
      report["config"]["tail"] = tail;
      report["config"]["tol"] = cluster_tol;
      report["config"]["gap_tol"] = gap;
      output.json(report, out_path);
      return kSuccess;
    }
  } catch (const ToleranceError& e) {
    err << "radtoep: tolerance failure: " << e.what() << " (estimate " << e.estimate() << ", error estimate "
        << e.error_estimate() << ")\n";
    return kTolerance;
  } catch (const InvariantError& e) {
    err << "radtoep: internal invariant failure: " << e.what() << '\n';
    return kAssertion;
  } catch (const std::exception& e) {
    err << "radtoep: " << e.what() << '\n';
    return kValidation;
  }

  err << app.help();
  return kUsage;
}

}  // namespace radtoep::cli
