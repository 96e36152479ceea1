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

#include "radtoep/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "radtoep/sequences.hpp"
#include "compensated_sum.hpp"

namespace radtoep {

namespace {

constexpr double kUlp = std::numeric_limits<double>::epsilon();

using detail::CompensatedSum;

void require_step_budget_domain(double C, std::int64_t n) {
  if (!(C > 4.0)) throw DomainError("the step-budget constant C must exceed 4");
  if (n < 1 || static_cast<double>(n) < C) {
    std::ostringstream msg;
    msg << "n=" << n << " must satisfy n >= C=" << C;
    throw DomainError(msg.str());
  }
}

double inv_square(std::int64_t k) {
  const double kd = static_cast<double>(k);
  return 1.0 / (kd * kd);
}

// Slack for re-deriving a bound from stored values: relative 1e-9 on the
// bound plus a few ulps of the operands that were combined.
bool within(double value, double bound, double operand_scale) {
  return value <= bound * (1.0 + 1e-9) + 8.0 * kUlp * operand_scale;
}

struct PartRun {
  std::vector<double> y;
  std::vector<bool> step_ok;
  std::vector<bool> curvature_ok;
};

// One coordinate of the greedy pass, in normalized units (d1 <= 1).
PartRun project_part(const std::vector<double>& x, const ApproximationParams& params) {
  const std::size_t count = x.size();
  PartRun run;
  run.y.assign(count, 0.0);
  run.step_ok.assign(count, true);
  run.curvature_ok.assign(count, true);

  const std::size_t copied =
      std::min<std::size_t>(count, static_cast<std::size_t>(params.prefix_cutoff) + 1);
  std::copy(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(copied), run.y.begin());

  for (std::size_t n = copied; n < count; ++n) {
    const double nd = static_cast<double>(n);
    const double step_budget = 1.0 / nd;
    const double curvature_budget = params.C / (nd * nd);
    const double previous_step = run.y[n - 1] - run.y[n - 2];

    const double lo = std::max(-step_budget, previous_step - curvature_budget);
    const double hi = std::min(step_budget, previous_step + curvature_budget);
    if (lo > hi) {
      std::ostringstream msg;
      msg << "feasible step interval is empty at n=" << n << ": [" << lo << ", " << hi
          << "], previous step " << previous_step;
      throw InvariantError(msg.str());
    }
    const double delta = std::clamp(x[n] - run.y[n - 1], lo, hi);
    run.y[n] = run.y[n - 1] + delta;

    run.step_ok[n] = within(std::abs(delta), step_budget, 0.0);
    run.curvature_ok[n] = within(std::abs(delta - previous_step), curvature_budget,
                                 std::abs(delta) + std::abs(previous_step));
  }
  return run;
}

}  // namespace

double choose_C(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be a positive finite number");
  }
  return std::max(5.0, 4.0 + 8.0 / epsilon);
}

std::int64_t find_m(double C, std::int64_t n) {
  require_step_budget_domain(C, n);
  const double target = 1.0 / static_cast<double>(n);
  CompensatedSum partial;
  std::int64_t m = n;
  for (;;) {
    CompensatedSum trial = partial;
    trial.add(C * inv_square(m + 1));
    if (trial.value() > target) break;
    partial = trial;
    ++m;
  }
  if (m < n + 1) throw InvariantError("find_m: first partial sum already exceeds 1/n");
  return m;
}

double E_value(double C, std::int64_t n, std::int64_t m) {
  const std::int64_t expected = find_m(C, n);
  if (m != expected) {
    throw DomainError("E_value: m=" + std::to_string(m) + " is not find_m(C, n)=" +
                      std::to_string(expected));
  }
  const double inv_n = 1.0 / static_cast<double>(n);
  CompensatedSum partial;
  CompensatedSum total;
  for (std::int64_t p = n + 1; p <= m; ++p) {
    partial.add(C * inv_square(p));
    total.add(inv_n - partial.value());
  }
  return total.value();
}

double harmonic_tail(std::int64_t n, std::int64_t m) {
  CompensatedSum total;
  for (std::int64_t k = n + 1; k <= m; ++k) total.add(1.0 / static_cast<double>(k));
  return total.value();
}

ApproximationParams make_params(double epsilon) {
  ApproximationParams params;
  params.epsilon = epsilon;
  params.C = choose_C(epsilon);
  params.prefix_cutoff = static_cast<std::int64_t>(std::ceil(std::max(2.0 / epsilon, params.C)));
  return params;
}

bool ApproximationResult::audits_pass() const {
  return interval_nonempty_audit &&
         std::all_of(step_audit.begin(), step_audit.end(), [](bool b) { return b; }) &&
         std::all_of(curvature_audit.begin(), curvature_audit.end(), [](bool b) { return b; });
}

ApproximationResult project_to_d2(const EigenvalueSequence& x, double epsilon) {
  const ApproximationParams params = make_params(epsilon);
  if (x.size() < 3) throw WindowError("project_to_d2 needs a window of at least 3 entries");

  const double scale = std::max(1.0, d1_seminorm(x).value);
  const bool complex_input = !x.is_real();

  auto normalized = [scale](std::vector<double> v) {
    for (double& e : v) e /= scale;
    return v;
  };
  const PartRun re = project_part(normalized(x.real_part()), params);
  PartRun im;
  if (complex_input) im = project_part(normalized(x.imag_part()), params);

  std::vector<Complex> y(x.size());
  std::vector<bool> step(x.size());
  std::vector<bool> curvature(x.size());
  double deviation = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double yi = complex_input ? im.y[n] : 0.0;
    y[n] = Complex(re.y[n] * scale, yi * scale);
    step[n] = re.step_ok[n] && (!complex_input || im.step_ok[n]);
    curvature[n] = re.curvature_ok[n] && (!complex_input || im.curvature_ok[n]);
    deviation = std::max(deviation, std::abs(x[n] - y[n]));
  }

  ApproximationResult result{EigenvalueSequence(std::move(y)), params, scale, deviation, 0.0, {}, {}, true};
  result.scale = scale;
  result.sup_deviation = deviation;
  result.deviation_bound = 5.0 * epsilon * scale * (complex_input ? std::sqrt(2.0) : 1.0);
  result.step_audit = std::move(step);
  result.curvature_audit = std::move(curvature);
  result.interval_nonempty_audit = true;
  return result;
}

ApproximationAudit verify_approximation(const EigenvalueSequence& x, const ApproximationResult& result) {
  if (x.size() != result.y.size()) {
    throw WindowError("verify_approximation: input has " + std::to_string(x.size()) +
                      " entries but the result has " + std::to_string(result.y.size()));
  }
  ApproximationAudit audit;
  const auto& params = result.params;
  const double scale = result.scale;
  const std::size_t first =
      std::max<std::size_t>(2, static_cast<std::size_t>(std::max<std::int64_t>(params.prefix_cutoff, 0)) + 1);

  auto check_part = [&](const std::vector<double>& xs, const std::vector<double>& ys) {
    for (std::size_t n = first; n < ys.size(); ++n) {
      const double nd = static_cast<double>(n);
      const double u0 = ys[n] / scale;
      const double u1 = ys[n - 1] / scale;
      const double u2 = ys[n - 2] / scale;
      const double step = u0 - u1;
      if (!within(std::abs(step), 1.0 / nd, std::abs(u0) + std::abs(u1))) {
        audit.step_clause = false;
        if (!audit.first_step_failure || n < *audit.first_step_failure) audit.first_step_failure = n;
      }
      const double curvature = u0 - 2.0 * u1 + u2;
      if (!within(std::abs(curvature), params.C / (nd * nd),
                  std::abs(u0) + 2.0 * std::abs(u1) + std::abs(u2))) {
        audit.curvature_clause = false;
        if (!audit.first_curvature_failure || n < *audit.first_curvature_failure) {
          audit.first_curvature_failure = n;
        }
      }
    }
    for (std::size_t n = first - 1; n + 1 < ys.size(); ++n) {
      const double a = (xs[n] - ys[n]) / scale;
      const double b = (xs[n + 1] - ys[n + 1]) / scale;
      const bool flipped = (a < 0.0) != (b < 0.0) || a == 0.0 || b == 0.0;
      if (!flipped) continue;
      const double bound = 2.0 / static_cast<double>(n + 1);
      if (!within(std::abs(b), bound, (std::abs(xs[n + 1]) + std::abs(ys[n + 1])) / scale)) {
        audit.sign_flip_clause = false;
        if (!audit.first_sign_flip_failure || n < *audit.first_sign_flip_failure) {
          audit.first_sign_flip_failure = n;
        }
      }
    }
  };
  check_part(x.real_part(), result.y.real_part());
  if (!x.is_real() || !result.y.is_real()) check_part(x.imag_part(), result.y.imag_part());

  for (std::size_t n = 0; n < x.size(); ++n) {
    audit.sup_deviation = std::max(audit.sup_deviation, std::abs(x[n] - result.y[n]));
  }
  audit.deviation_clause = audit.sup_deviation <= result.deviation_bound * (1.0 + 1e-12);
  return audit;
}

}  // namespace radtoep
