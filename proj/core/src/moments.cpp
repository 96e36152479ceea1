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

#include "radtoep/moments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "radtoep/parallel.hpp"
#include "radtoep/sequences.hpp"

namespace radtoep {

double eigenvalue_of_symbol(const RadialSymbol& b, std::size_t n, const QuadratureConfig& config) {
  if (auto exact = b.exact_eigenvalue(n)) return *exact;

  const double exponent = 1.0 / (static_cast<double>(n) + 1.0);
  auto integrand = [&b, exponent](double u) {
    const double log_t = std::log(u) * exponent;
    return b.at_t(std::exp(log_t), -std::expm1(log_t));
  };
  std::vector<double> cuts;
  for (double jump : b.breakpoints_t()) cuts.push_back(std::pow(jump, 1.0 / exponent));
  // In u the symbol depends on log(1 - t) ~ log(-log u), which varies on
  // geometric scales at both ends, so refine toward u = 0 and u = 1.
  if (b.oscillates_at_boundary()) {
    for (double end : {0.0, 1.0}) {
      const auto extra = geometric_cuts(1.0 - end, end, kBoundaryCutLevels);
      cuts.insert(cuts.end(), extra.begin(), extra.end());
    }
  }
  return integrate(integrand, 0.0, 1.0, config, cuts).value;
}

EigenvalueSequence eigenvalues_of_symbol(const RadialSymbol& b, std::size_t count, const QuadratureConfig& config) {
  if (count == 0) throw WindowError("eigenvalue window must hold at least one value");
  config.validate();
  std::vector<Complex> values(count);
  parallel_for(count, [&](std::size_t n) { values[n] = eigenvalue_of_symbol(b, n, config); });
  return EigenvalueSequence(std::move(values));
}

double sup_norm_estimate(const EigenvalueSequence& lambda) { return sup_norm(lambda).value; }

namespace {

// G(t) / (1 - t) = int_0^1 b(sqrt(t + (1-t) s)) ds.
double tail_ratio(const RadialSymbol& b, double t, const QuadratureConfig& config) {
  const double width = 1.0 - t;
  if (auto exact = b.exact_tail_integral(t)) return *exact / width;
  auto integrand = [&b, t, width](double s) { return b.at_t(t + width * s, width * (1.0 - s)); };
  std::vector<double> cuts;
  for (double jump : b.breakpoints_t()) {
    if (jump > t) cuts.push_back((jump - t) / width);
  }
  if (b.oscillates_at_boundary()) {
    const auto extra = geometric_cuts(0.0, 1.0, kBoundaryCutLevels);
    cuts.insert(cuts.end(), extra.begin(), extra.end());
  }
  return integrate(integrand, 0.0, 1.0, config, cuts).value;
}

}  // namespace

LconEstimate lcon_constant(const RadialSymbol& b, int grid, const QuadratureConfig& config) {
  if (grid < 2) throw DomainError("lcon grid needs at least 2 points");
  config.validate();
  std::vector<double> ratios(static_cast<std::size_t>(grid));
  std::vector<double> ts(static_cast<std::size_t>(grid));
  parallel_for(ratios.size(), [&](std::size_t j) {
    ts[j] = 1.0 - std::exp2(-0.5 * static_cast<double>(j));
    ratios[j] = std::abs(tail_ratio(b, ts[j], config));
  });
  LconEstimate out;
  out.grid_points = ratios.size();
  for (std::size_t j = 0; j < ratios.size(); ++j) {
    if (ratios[j] > out.constant) {
      out.constant = ratios[j];
      out.t_at_max = ts[j];
    }
  }
  return out;
}

CorollaryReport corollary_bounds_check(const RadialSymbol& b, std::size_t count, const QuadratureConfig& config,
                                       int grid) {
  if (count < 3) throw WindowError("corollary check needs a window of at least 3 eigenvalues");
  const EigenvalueSequence lambda = eigenvalues_of_symbol(b, count, config);

  CorollaryReport report;
  report.window = count;
  report.lcon = lcon_constant(b, grid, config).constant;
  report.sup_norm = sup_norm_estimate(lambda);
  report.d2 = d2_seminorm(lambda).value;
  report.sup_bound = b.sup_bound();
  report.tol = 10.0 * config.abs_tol * static_cast<double>(count);

  for (std::size_t n = 1; n + 1 < count; ++n) {
    const double w = static_cast<double>(n + 2);
    const double v = w * w * std::abs(difference(lambda, 2, n - 1));
    if (v > report.kernel_max) {
      report.kernel_max = v;
      report.kernel_argmax = n;
    }
  }

  auto fail = [&report](bool& clause, const std::string& what, double lhs, double rhs) {
    clause = false;
    std::ostringstream msg;
    msg << what << ": " << lhs << " > " << rhs;
    report.failures.push_back(msg.str());
  };
  if (report.sup_norm > report.lcon + report.tol) {
    fail(report.sup_clause, "sup norm exceeds lcon constant", report.sup_norm, report.lcon + report.tol);
  }
  if (report.d2 > 10.0 * report.lcon + report.tol) {
    fail(report.d2_clause, "d2 seminorm exceeds 10 C", report.d2, 10.0 * report.lcon + report.tol);
  }
  if (report.kernel_max > 8.0 * report.sup_bound + report.tol) {
    fail(report.kernel_clause, "(n+2)^2 |Delta^2_{n-1}| exceeds 8 sup|b|", report.kernel_max,
         8.0 * report.sup_bound + report.tol);
  }
  return report;
}

}  // namespace radtoep
