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


#include "radtoep/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "radtoep/errors.hpp"
#include "radtoep/sequences.hpp"
#include "compensated_sum.hpp"

namespace radtoep {

namespace {

class ComplexSum {
 public:
  void add(Complex v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  detail::CompensatedSum re_;
  detail::CompensatedSum im_;
};

}  // namespace

GammaSequence gamma_of_lambda(const EigenvalueSequence& lambda) {
  const std::size_t count = lambda.size();
  if (count < 2) throw WindowError("gamma map needs a window of at least 2 eigenvalues");
  std::vector<Complex> gamma(count - 1);
  gamma[0] = 2.0 * (lambda[1] - lambda[0]);
  for (std::size_t n = 1; n + 1 < count; ++n) {
    const double nd = static_cast<double>(n);
    gamma[n] = (nd + 1.0) * ((nd + 2.0) * (lambda[n + 1] - lambda[n]) - nd * (lambda[n] - lambda[n - 1]));
  }
  return GammaSequence(std::move(gamma));
}

EigenvalueSequence lambda_of_gamma(const GammaSequence& gamma, Complex lambda0) {
  if (!std::isfinite(lambda0.real()) || !std::isfinite(lambda0.imag())) {
    throw DomainError("lambda_0 must be finite");
  }
  std::vector<Complex> lambda(gamma.size() + 1);
  lambda[0] = lambda0;
  ComplexSum prefix;
  ComplexSum level;
  level.add(lambda0);
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    const double nd = static_cast<double>(n);
    prefix.add(gamma[n]);
    const Complex b = prefix.value() / (nd + 2.0);
    level.add(b / (nd + 1.0));
    lambda[n + 1] = level.value();
  }
  return EigenvalueSequence(std::move(lambda));
}

std::string_view to_string(EquivalenceStatus status) noexcept {
  switch (status) {
    case EquivalenceStatus::kHolds: return "holds";
    case EquivalenceStatus::kViolated: return "violated";
    case EquivalenceStatus::kWindowInconclusive: return "window-inconclusive";
  }
  return "unknown";
}

NormEquivalenceReport norm_equivalence_check(const EigenvalueSequence& lambda) {
  if (lambda.size() < 3) throw WindowError("norm equivalence check needs a window of at least 3");
  NormEquivalenceReport report;
  report.window = lambda.size();
  const WindowMax d2 = d2_seminorm(lambda);
  report.d2 = d2.value;
  report.d2_argmax = d2.argmax;
  report.lower = d2.value / 6.0;
  report.upper = 6.0 * d2.value;

  const GammaSequence gamma = gamma_of_lambda(lambda);
  double prefix_max = 0.0;
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    const double g = std::abs(gamma[n]);
    if (g > report.gamma_sup) {
      report.gamma_sup = g;
      report.gamma_argmax = n;
    }
    prefix_max = std::max(prefix_max, g);
    // b_{n+1} = (n+1)(lambda_{n+1} - lambda_n) = (gamma_0 + ... + gamma_n) / (n+2)
    const double weight = static_cast<double>(n) + 1.0;
    const double b = std::abs(weight * (lambda[n + 1] - lambda[n]));
    const double rounding = 1e-12 * weight * (std::abs(lambda[n + 1]) + std::abs(lambda[n]));
    if (b > prefix_max * (1.0 + 1e-12) + rounding) report.telescoping_bound_holds = false;
  }

  const double slack = 1e-12 * std::max(report.upper, report.gamma_sup);
  const bool holds = report.lower <= report.gamma_sup + slack && report.gamma_sup <= report.upper + slack;
  if (holds) {
    report.status = EquivalenceStatus::kHolds;
  } else {
    const std::size_t quarter = report.window - report.window / 4;
    const bool late = report.d2_argmax + 2 >= quarter || report.gamma_argmax + 1 >= quarter;
    report.status = late ? EquivalenceStatus::kWindowInconclusive : EquivalenceStatus::kViolated;
  }
  return report;
}

Complex laplacian_series_value(const GammaSequence& gamma, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw RangeError("laplacian series needs r in [0, 1)");
  const long double x = static_cast<long double>(r) * r;
  const long double omx = (1.0L - r) * (1.0L + r);
  std::complex<long double> acc = 0.0L;
  for (std::size_t n = gamma.size(); n-- > 0;) {
    const std::complex<long double> g(gamma[n].real(), gamma[n].imag());
    acc = acc * x + g * static_cast<long double>(n + 1);
  }
  acc *= omx * omx;
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace radtoep
