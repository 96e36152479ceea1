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

// Eigenvalues of Toeplitz operators with radial symbols.
//
// For a radial symbol b the Toeplitz operator T_b is diagonal in z^n with
//
//   lambda_n = (n+1) int_0^1 b(sqrt t) t^n dt = int_0^1 b(u^{1/(2n+2)}) du,
//
// the second form (u = t^{n+1}) being what gets integrated: the weight
// (n+1) t^n piles up at t = 1 for large n, while the substituted integrand
// spreads its mass over the whole interval.

#ifndef RADTOEP_MOMENTS_HPP
#define RADTOEP_MOMENTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "radtoep/quadrature.hpp"
#include "radtoep/sequence.hpp"
#include "radtoep/symbol.hpp"

namespace radtoep {

/// lambda_0..lambda_{N-1} of T_b. Constant and piecewise symbols use exact
/// antiderivatives; all others use adaptive quadrature. Quadrature failure
/// propagates as ToleranceError.
EigenvalueSequence eigenvalues_of_symbol(const RadialSymbol& b, std::size_t count,
                                         const QuadratureConfig& config = {});

/// Single eigenvalue; same rules as eigenvalues_of_symbol.
double eigenvalue_of_symbol(const RadialSymbol& b, std::size_t n, const QuadratureConfig& config = {});

/// max_n |lambda_n|, the norm of the radial operator restricted to the window.
double sup_norm_estimate(const EigenvalueSequence& lambda);

struct LconEstimate {
  /// sup over the grid of |G(t)| / (1 - t), G(t) = int_t^1 b(sqrt x) dx.
  double constant = 0.0;
  double t_at_max = 0.0;
  std::size_t grid_points = 0;
};

/// Grid t_j = 1 - 2^{-j/2}, j = 0..grid-1 (so t_0 = 0). The ratio is
/// integrated directly as int_0^1 b(sqrt(t + (1-t)s)) ds, which avoids
/// dividing a tiny G(t) by a tiny 1 - t. Needs grid >= 2.
LconEstimate lcon_constant(const RadialSymbol& b, int grid = 96, const QuadratureConfig& config = {});

/// Checks, on a window of N eigenvalues of T_b and with
/// tol = 10 * abs_tol * N:
///   (a) sup |lambda_n|                  <= C + tol
///   (b) window d2 seminorm              <= 10 C + tol
///   (c) (n+2)^2 |Delta^2_{n-1} lambda|  <= 8 sup|b| + tol   for 1 <= n <= N-2
/// where C is the lcon constant. Failures are reported, not thrown.
struct CorollaryReport {
  std::size_t window = 0;
  double lcon = 0.0;
  double sup_norm = 0.0;
  double d2 = 0.0;
  double kernel_max = 0.0;
  std::size_t kernel_argmax = 0;
  double sup_bound = 0.0;
  double tol = 0.0;
  bool sup_clause = true;
  bool d2_clause = true;
  bool kernel_clause = true;
  std::vector<std::string> failures;

  bool passed() const { return sup_clause && d2_clause && kernel_clause; }
};

CorollaryReport corollary_bounds_check(const RadialSymbol& b, std::size_t count,
                                       const QuadratureConfig& config = {}, int grid = 96);

}  // namespace radtoep

#endif  // RADTOEP_MOMENTS_HPP
