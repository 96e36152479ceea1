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


#include "radtoep/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>

#include "radtoep/errors.hpp"

namespace radtoep::io {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& problem) {
  throw ParseError(source + ": field '" + field + "': " + problem);
}

double number_at(const Json& j, const std::string& source, const std::string& field) {
  if (!j.is_number()) fail(source, field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(source, field, "expected a finite number");
  return v;
}

Complex complex_at(const Json& j, const std::string& source, const std::string& field) {
  if (j.is_number()) return {number_at(j, source, field), 0.0};
  if (!j.is_array() || j.size() != 2) fail(source, field, "expected [re, im] or a number");
  return {number_at(j[0], source, field + "[0]"), number_at(j[1], source, field + "[1]")};
}

const Json& member(const Json& j, const std::string& source, const std::string& name) {
  if (!j.is_object()) fail(source, "<root>", "expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) fail(source, name, "missing");
  return *it;
}

std::vector<Complex> complex_list(const Json& j, const std::string& source, const std::string& name) {
  const Json& arr = member(j, source, name);
  if (!arr.is_array()) fail(source, name, "expected an array");
  if (arr.empty()) fail(source, name, "must not be empty");
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(complex_at(arr[i], source, name + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<double> real_list(const Json& j, const std::string& source, const std::string& name) {
  const Json& arr = member(j, source, name);
  if (!arr.is_array()) fail(source, name, "expected an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(number_at(arr[i], source, name + "[" + std::to_string(i) + "]"));
  return out;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

template <class T>
Json optional_index(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json bool_list(const std::vector<bool>& flags) {
  // Only failing indices are listed; the full vectors can be huge.
  Json out = Json::array();
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (!flags[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, ptr);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": malformed JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  out << j.dump(2) << '\n';
  if (!out) throw ParseError(path + ": write failed");
}

EigenvalueSequence sequence_from_json(const Json& j, const std::string& source) {
  return EigenvalueSequence(complex_list(j, source, "values"));
}

GammaSequence gamma_from_json(const Json& j, const std::string& source) {
  return GammaSequence(complex_list(j, source, "values"));
}

Json to_json(std::span<const Complex> values) {
  Json arr = Json::array();
  for (const Complex& z : values) arr.push_back(complex_json(z));
  return Json{{"values", std::move(arr)}};
}

void write_sequence_csv(std::ostream& out, std::span<const Complex> values) {
  out << "n,re,im\n";
  for (std::size_t n = 0; n < values.size(); ++n) {
    out << n << ',' << format_double(values[n].real()) << ',' << format_double(values[n].imag()) << '\n';
  }
}

EigenvalueSequence sequence_from_csv(std::istream& in, const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) fail(source, "header", "empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "n,re,im") fail(source, "header", "expected 'n,re,im'");
  std::vector<Complex> values;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string field = "row " + std::to_string(row + 1);
    std::stringstream ss(line);
    std::string cols[3];
    for (auto& c : cols) {
      if (!std::getline(ss, c, ',')) fail(source, field, "expected three columns n,re,im");
    }
    double parsed[3];
    for (int c = 0; c < 3; ++c) {
      const char* first = cols[c].data();
      const char* last = first + cols[c].size();
      auto [ptr, ec] = std::from_chars(first, last, parsed[c]);
      if (ec != std::errc() || ptr != last || !std::isfinite(parsed[c])) fail(source, field, "bad number '" + cols[c] + "'");
    }
    if (parsed[0] != static_cast<double>(row)) fail(source, field, "index column out of order");
    values.emplace_back(parsed[1], parsed[2]);
    ++row;
  }
  if (values.empty()) fail(source, "rows", "no values");
  return EigenvalueSequence(std::move(values));
}

EigenvalueSequence read_sequence_file(const std::string& path) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    return sequence_from_csv(in, path);
  }
  return sequence_from_json(read_json_file(path), path);
}

RadialSymbol symbol_from_json(const Json& j, const std::string& source) {
  const Json& variant_json = member(j, source, "variant");
  if (!variant_json.is_string()) fail(source, "variant", "expected a string");
  const std::string variant = variant_json.get<std::string>();
  std::string field = "variant";
  try {
    RadialSymbol b = [&]() {
      if (variant == "constant") {
        field = "c";
        return RadialSymbol::constant(number_at(member(j, source, "c"), source, "c"));
      }
      if (variant == "power") {
        field = "s";
        return RadialSymbol::power(number_at(member(j, source, "s"), source, "s"));
      }
      if (variant == "piecewise") {
        field = "breakpoints";
        return RadialSymbol::piecewise(real_list(j, source, "breakpoints"), real_list(j, source, "values"));
      }
      if (variant == "indicator") {
        field = "a";
        return RadialSymbol::indicator(number_at(member(j, source, "a"), source, "a"));
      }
      if (variant == "log_oscillation") {
        field = "beta";
        return RadialSymbol::log_oscillation(number_at(member(j, source, "beta"), source, "beta"));
      }
      if (variant == "tabulated") {
        field = "t";
        return RadialSymbol::tabulated(real_list(j, source, "t"), real_list(j, source, "values"));
      }
      fail(source, "variant", "unknown variant '" + variant + "'");
    }();
    if (j.contains("sup_bound")) {
      field = "sup_bound";
      b = b.with_sup_bound(number_at(j["sup_bound"], source, "sup_bound"));
    }
    return b;
  } catch (const DomainError& e) {
    fail(source, field, e.what());
  }
}

Json to_json(const RadialSymbol& b) {
  Json j;
  j["variant"] = std::string(b.kind_name());
  switch (b.kind()) {
    case RadialSymbol::Kind::kConstant: j["c"] = b.constant_value(); break;
    case RadialSymbol::Kind::kPower: j["s"] = b.power_exponent(); break;
    case RadialSymbol::Kind::kPiecewise:
      j["breakpoints"] = b.piecewise_breakpoints();
      j["values"] = b.piecewise_values();
      break;
    case RadialSymbol::Kind::kLogOscillation: j["beta"] = b.oscillation_beta(); break;
    case RadialSymbol::Kind::kTabulated:
      j["t"] = b.tabulated_t();
      j["values"] = b.tabulated_values();
      break;
  }
  j["sup_bound"] = b.sup_bound();
  return j;
}

SpectrumPath path_from_json(const Json& j, const std::string& source) {
  std::vector<Complex> vertices = complex_list(j, source, "vertices");
  try {
    return SpectrumPath(std::move(vertices));
  } catch (const DomainError& e) {
    fail(source, "vertices", e.what());
  }
}

Json to_json(const SpectrumPath& path) {
  Json arr = Json::array();
  for (const Complex& z : path.vertices()) arr.push_back(complex_json(z));
  return Json{{"vertices", std::move(arr)}, {"length", path.length()}};
}

Json to_json(const QuadratureConfig& config) {
  return Json{{"nodes_per_panel", config.nodes_per_panel},
              {"abs_tol", config.abs_tol},
              {"max_panels", config.max_panels}};
}

Json to_json(const SeminormReport& report) {
  Json j{{"window", report.window},   {"sup_norm", report.sup_norm}, {"sup_argmax", report.sup_argmax},
         {"d1", report.d1},           {"d1_argmax", report.d1_argmax}, {"d2", report.d2},
         {"d2_argmax", report.d2_argmax}};
  j["hausdorff_max"] = report.hausdorff_max ? Json(*report.hausdorff_max) : Json(nullptr);
  return j;
}

Json to_json(const HausdorffGrid& grid) {
  Json rows = Json::array();
  for (int m = 0; m <= grid.m_max; ++m) {
    const auto& row = grid.rows[static_cast<std::size_t>(m)];
    rows.push_back(Json{{"m", m},
                        {"k_first", m},
                        {"values", row},
                        {"row_max", grid.row_max[static_cast<std::size_t>(m)]},
                        {"row_argmax_k", grid.row_argmax[static_cast<std::size_t>(m)]}});
  }
  return Json{{"m_max", grid.m_max}, {"k_max", grid.k_max}, {"max", grid.max}, {"rows", std::move(rows)}};
}

Json to_json(const ApproximationResult& result, const ApproximationAudit& audit) {
  Json j;
  j["params"] = Json{{"epsilon", result.params.epsilon},
                     {"C", result.params.C},
                     {"prefix_cutoff", result.params.prefix_cutoff}};
  j["scale"] = result.scale;
  j["sup_deviation"] = result.sup_deviation;
  j["deviation_bound"] = result.deviation_bound;
  j["construction_audit"] = Json{{"step_failures", bool_list(result.step_audit)},
                                 {"curvature_failures", bool_list(result.curvature_audit)},
                                 {"interval_nonempty", result.interval_nonempty_audit},
                                 {"passed", result.audits_pass()}};
  j["verification"] = Json{{"step_clause", audit.step_clause},
                           {"first_step_failure", optional_index(audit.first_step_failure)},
                           {"curvature_clause", audit.curvature_clause},
                           {"first_curvature_failure", optional_index(audit.first_curvature_failure)},
                           {"sign_flip_clause", audit.sign_flip_clause},
                           {"first_sign_flip_failure", optional_index(audit.first_sign_flip_failure)},
                           {"sup_deviation", audit.sup_deviation},
                           {"deviation_clause", audit.deviation_clause},
                           {"passed", audit.passed()}};
  j["y"] = to_json(result.y.values())["values"];
  return j;
}

Json to_json(const LconEstimate& estimate) {
  return Json{{"constant", estimate.constant},
              {"t_at_max", estimate.t_at_max},
              {"grid_points", estimate.grid_points}};
}

Json to_json(const CorollaryReport& report) {
  return Json{{"window", report.window},
              {"lcon", report.lcon},
              {"sup_norm", report.sup_norm},
              {"d2", report.d2},
              {"kernel_max", report.kernel_max},
              {"kernel_argmax", report.kernel_argmax},
              {"sup_bound", report.sup_bound},
              {"tol", report.tol},
              {"sup_clause", report.sup_clause},
              {"d2_clause", report.d2_clause},
              {"kernel_clause", report.kernel_clause},
              {"failures", report.failures},
              {"passed", report.passed()}};
}

Json to_json(const ConvergenceReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"k", row.k},
                        {"deviation", row.deviation},
                        {"sup_norm", row.sup_norm},
                        {"gamma_sup", row.gamma_sup},
                        {"tail_weight", row.tail_weight}});
  }
  return Json{{"window", report.window},
              {"input_sup_norm", report.input_sup_norm},
              {"deviation_nonincreasing", report.deviation_nonincreasing},
              {"final_over_initial", report.final_over_initial},
              {"contraction_excess", report.contraction_excess},
              {"rows", std::move(rows)}};
}

Json to_json(const NormEquivalenceReport& report) {
  return Json{{"window", report.window},
              {"d2", report.d2},
              {"d2_argmax", report.d2_argmax},
              {"gamma_sup", report.gamma_sup},
              {"gamma_argmax", report.gamma_argmax},
              {"lower", report.lower},
              {"upper", report.upper},
              {"status", std::string(to_string(report.status))},
              {"telescoping_bound_holds", report.telescoping_bound_holds}};
}

Json to_json(const LimitSet& limits) {
  Json reps = Json::array();
  for (const Complex& z : limits.representatives) reps.push_back(complex_json(z));
  return Json{{"tail_start", limits.tail_start},
              {"representatives", std::move(reps)},
              {"component", limits.component},
              {"component_count", limits.component_count}};
}

}  // namespace radtoep::io
