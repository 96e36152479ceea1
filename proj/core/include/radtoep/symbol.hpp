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

#ifndef RADTOEP_SYMBOL_HPP
#define RADTOEP_SYMBOL_HPP

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

namespace radtoep {

/// A bounded radial function b(r) on [0, 1).
///
/// Most of the library works in the variable t = r^2, where moments and the
/// growth conditions are naturally expressed, so symbols are evaluated through
/// at_t(t, 1 - t). Passing 1 - t separately lets symbols that blow up in
/// oscillation near the boundary (log_oscillation) avoid the cancellation in
/// 1 - t when t is close to 1.
class RadialSymbol {
 public:
  enum class Kind { kConstant, kPower, kPiecewise, kLogOscillation, kTabulated };

  /// b(r) = c.
  static RadialSymbol constant(double c);
  /// b(r) = r^{2s}, s >= 0.
  static RadialSymbol power(double s);
  /// Piecewise constant in t = r^2: b = values[j] on [breakpoints[j], breakpoints[j+1]).
  /// breakpoints must start at 0, end at 1, and be strictly increasing.
  static RadialSymbol piecewise(std::vector<double> breakpoints, std::vector<double> values);
  /// Indicator of {t >= a}.
  static RadialSymbol indicator(double a);
  /// b(r) = sin(beta * ln(1 / (1 - r^2))).
  static RadialSymbol log_oscillation(double beta);
  /// Monotone piecewise-cubic (PCHIP) interpolation of samples in t. Samples
  /// must cover [t.front(), t.back()] with at least 4 strictly increasing
  /// nodes; outside that range the nearest sample is used.
  static RadialSymbol tabulated(std::vector<double> t, std::vector<double> values);

  /// Replaces the declared bound on |b|. The declaration is spot-checked on a
  /// fixed set of sample points; a violated sample raises DomainError.
  RadialSymbol with_sup_bound(double bound) const;

  Kind kind() const noexcept;
  std::string_view kind_name() const noexcept;

  /// b(r) for r in [0, 1).
  double operator()(double r) const;
  /// b(sqrt(t)) given t and 1 - t.
  double at_t(double t, double one_minus_t) const;
  double at_t(double t) const { return at_t(t, 1.0 - t); }

  double sup_bound() const noexcept;

  /// Points in (0, 1) of t where b may jump; quadratures split there.
  const std::vector<double>& breakpoints_t() const noexcept;

  /// True when b oscillates infinitely often as t -> 1 (log_oscillation).
  /// Quadratures then refine geometrically toward t = 1.
  bool oscillates_at_boundary() const noexcept;

  /// Parameter accessors; each throws DomainError for the wrong kind.
  double constant_value() const;
  double power_exponent() const;
  double oscillation_beta() const;
  const std::vector<double>& piecewise_breakpoints() const;
  const std::vector<double>& piecewise_values() const;
  const std::vector<double>& tabulated_t() const;
  const std::vector<double>& tabulated_values() const;

  /// Exact lambda_n = (n+1) int_0^1 b(sqrt t) t^n dt for symbols where it is
  /// cheap to evaluate without quadrature (constant and piecewise kinds).
  std::optional<double> exact_eigenvalue(std::size_t n) const;

  /// Exact G(t) = int_t^1 b(sqrt x) dx where available (constant, piecewise).
  std::optional<double> exact_tail_integral(double t) const;

 private:
  struct Impl;
  explicit RadialSymbol(std::shared_ptr<const Impl> impl);
  void spot_check() const;

  std::shared_ptr<const Impl> impl_;
};

}  // namespace radtoep

#endif  // RADTOEP_SYMBOL_HPP
