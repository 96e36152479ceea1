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

// Greedy approximation of a sequence with bounded first-difference seminorm
// by one with controlled second differences.
//
// Past a prefix the output is built one step at a time: y_n = y_{n-1} + delta_n
// where delta_n is the point of
//
//   I_n = [-1/n, 1/n]  intersect  [d - C/n^2, d + C/n^2],   d = y_{n-1} - y_{n-2}
//
// closest to x_n - y_{n-1}. For d1(x) <= 1 the result stays within 5*eps of x.

#ifndef RADTOEP_APPROXIMATION_HPP
#define RADTOEP_APPROXIMATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "radtoep/sequence.hpp"

namespace radtoep {

/// C(eps) = max(5, 4 + 8/eps). Throws DomainError for eps <= 0.
double choose_C(double epsilon);

/// The unique m >= n+1 with
///   sum_{k=n+1}^{m}   C/k^2 <= 1/n   and
///   sum_{k=n+1}^{m+1} C/k^2 >  1/n,
/// found by forward compensated summation. Requires C > 4 and n >= C.
std::int64_t find_m(double C, std::int64_t n);

/// E(C,n) = sum_{p=n+1}^{m} (1/n - sum_{k=n+1}^{p} C/k^2). Requires
/// m == find_m(C, n).
double E_value(double C, std::int64_t n, std::int64_t m);

/// sum_{k=n+1}^{m} 1/k.
double harmonic_tail(std::int64_t n, std::int64_t m);

struct ApproximationParams {
  double epsilon = 0.0;
  double C = 0.0;
  /// ceil(max(2/eps, C)); indices n <= prefix_cutoff are copied from x.
  std::int64_t prefix_cutoff = 0;
};

ApproximationParams make_params(double epsilon);

struct ApproximationResult {
  EigenvalueSequence y;
  ApproximationParams params;
  /// x was divided by this before the greedy pass (max(1, window d1 of x))
  /// and y multiplied back by it afterwards.
  double scale = 1.0;
  double sup_deviation = 0.0;
  /// Deviation guarantee implied by the construction:
  /// 5 eps scale, times sqrt(2) for complex input.
  double deviation_bound = 0.0;
  /// Per index: |delta_n| <= scale/n (true on the copied prefix).
  std::vector<bool> step_audit;
  /// Per index: |Delta^2_{n-2} y| <= scale C/n^2 (true on the copied prefix).
  std::vector<bool> curvature_audit;
  /// No interval I_n was ever empty.
  bool interval_nonempty_audit = true;

  bool audits_pass() const;
};

/// Runs the greedy construction. Real and imaginary parts are processed
/// independently with a shared normalization. Needs N >= 3 and eps > 0.
/// An empty feasible interval raises InvariantError.
ApproximationResult project_to_d2(const EigenvalueSequence& x, double epsilon);

/// Independent recomputation of every clause of an ApproximationResult.
struct ApproximationAudit {
  bool step_clause = true;
  std::optional<std::size_t> first_step_failure;
  bool curvature_clause = true;
  std::optional<std::size_t> first_curvature_failure;
  /// Whenever sgn(x_n - y_n) flips between n and n+1 past the prefix,
  /// |x_{n+1} - y_{n+1}| <= 2 scale/(n+1) (checked per coordinate).
  bool sign_flip_clause = true;
  std::optional<std::size_t> first_sign_flip_failure;
  double sup_deviation = 0.0;
  bool deviation_clause = true;

  bool passed() const {
    return step_clause && curvature_clause && sign_flip_clause && deviation_clause;
  }
};

/// Throws WindowError when the windows differ in length.
ApproximationAudit verify_approximation(const EigenvalueSequence& x, const ApproximationResult& result);

}  // namespace radtoep

#endif  // RADTOEP_APPROXIMATION_HPP
