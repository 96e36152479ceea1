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

// k-Berezin transforms of radial operators and radial symbols.
//
// Operator side. Expanding the kernel (1 - conj(z) w)^{-(k+2)} in monomials
// gives, with x = r^2 and nu_q = lambda_q / (q+1),
//
//   B_k(S)(r) = (k+1) (1-x)^{k+2} sum_p a_p x^p,
//   a_p       = C(p+k+1, p)^2 sum_{j=0}^k C(k,j) (-1)^j nu_{p+j}.
//
// Symbol side. After the change of variables w = phi_r(xi) the angular
// integral has a closed form and, with t = |w|^2,
//
//   B_k(b)(r) = (k+1) int_0^1 b(sqrt t) rho^k (1-x)^2 (1-xt)^{-3} P_{k+1}(xt) dt,
//   rho       = (1-x)(1-t) / (1-xt)^2,   P_s(y) = sum_i C(s,i)^2 y^i.
//
// Iterates. The eigenvalues of T_{B_k(S)} are linear in lambda,
// lambda'_m = sum_n W_{m,n} lambda_n, with W built from Beta integrals of
// the series above (see berezin_weight). Rows of W are probability vectors.

#ifndef RADTOEP_BEREZIN_HPP
#define RADTOEP_BEREZIN_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "radtoep/quadrature.hpp"
#include "radtoep/sequence.hpp"
#include "radtoep/symbol.hpp"

namespace radtoep {

/// Largest radius at which series profiles are evaluated.
inline constexpr double kBerezinRMax = 0.995;

/// Truncated power series in x = r^2 for r -> B_k(S)(r).
struct BerezinProfile {
  int k = 0;
  /// a_p for p < order; the prefactor (k+1)(1-x)^{k+2} is applied on evaluation.
  std::vector<std::complex<long double>> coefficients;
  double truncation_tol = 0.0;
  /// Rigorous bound on the dropped tail at r = kBerezinRMax.
  double tail_bound = 0.0;
  /// Input window length, and whether coefficients read past it.
  std::size_t window = 0;
  bool window_extended = false;

  std::size_t order() const noexcept { return coefficients.size(); }

  /// B_k(S)(r) for r in [0, kBerezinRMax]; RangeError outside.
  Complex operator()(double r) const;
  /// d/dx and d^2/dx^2 of the profile as a function of x = r^2.
  Complex d_dx(double r) const;
  Complex d2_dx2(double r) const;
  /// (1-x)^2 (x f'' + f'), the invariant Laplacian of a radial function.
  Complex invariant_laplacian(double r) const;
};

/// Series profile of B_k(S) for the radial operator with eigenvalues lambda.
/// The order M is the first for which the tail bound at kBerezinRMax is at
/// most tol. If the coefficients need lambda_n with n >= N, the window is
/// extended by its last value; with strict set, that raises WindowError
/// instead.
BerezinProfile berezin_of_radial_operator(const EigenvalueSequence& lambda, int k, double tol = 1e-13,
                                          bool strict = false);

enum class AngularRule {
  /// Closed-form angular average of |1 - sqrt(xt) e^{i theta}|^{-2(k+2)}.
  kClosedForm,
  /// Periodic trapezoid rule, doubled until the average settles.
  kTrapezoid,
};

/// B_k(b)(r) by quadrature, r in [0, kBerezinRMax].
double berezin_of_radial_symbol(const RadialSymbol& b, int k, double r, const QuadratureConfig& config = {},
                                AngularRule rule = AngularRule::kClosedForm);

/// Same integral taking x = r^2 and 1 - x directly, for any x in [0, 1).
/// Used for tabulation close to the boundary.
double berezin_of_radial_symbol_at_x(const RadialSymbol& b, int k, double x, double one_minus_x,
                                     const QuadratureConfig& config = {},
                                     AngularRule rule = AngularRule::kClosedForm);

/// Entry W_{m,n} of the eigenvalue map lambda -> lambda(T_{B_k(S)}):
///
///   W_{m,n} = (k+1)(m+1)/(n+1) sum_{j=0}^{min(k,n)} (-1)^j C(k,j)
///             C(n-j+k+1, k+1)^2 B(n-j+m+1, k+3).
///
/// The alternating sum cancels heavily, so this evaluates it in exact
/// rational arithmetic and rounds once. It is the reference for the faster
/// cancellation-free evaluation used by berezin_iterate_eigenvalues.
double berezin_weight(int k, std::size_t m, std::size_t n);

struct BerezinIterate {
  EigenvalueSequence values;
  /// max over m of the weight placed on indices past the input window.
  double tail_weight = 0.0;
  bool window_extended = false;
};

/// lambda_m(T_{B_k(S)}) for m < count. Indices past the input window take
/// its last value; since rows of W sum to 1 this extension is applied
/// exactly through the leftover weight. With strict set, WindowError is
/// raised when tail_weight * sup|lambda| exceeds tol.
BerezinIterate berezin_iterate_eigenvalues(const EigenvalueSequence& lambda, int k, std::size_t count,
                                           double tol = 1e-10, bool strict = false);

struct ConvergenceRow {
  int k = 0;
  /// sup_{m < N} |lambda_m(T_{B_k(S)}) - lambda_m|
  double deviation = 0.0;
  /// sup_{m < N} |lambda_m(T_{B_k(S)})|
  double sup_norm = 0.0;
  /// sup of |gamma| of the iterate, a radial proxy for the invariant Laplacian norm.
  double gamma_sup = 0.0;
  double tail_weight = 0.0;
};

struct ConvergenceReport {
  std::size_t window = 0;
  double input_sup_norm = 0.0;
  std::vector<ConvergenceRow> rows;
  bool deviation_nonincreasing = true;
  /// deviation(k_max) / deviation(0), or 0 when deviation(0) is 0.
  double final_over_initial = 0.0;
  /// max_k sup_norm(k) - input_sup_norm; contraction means this is <= 0.
  double contraction_excess = 0.0;
};

/// Sweeps k = 0..k_max on a window of count eigenvalues.
ConvergenceReport convergence_report(const EigenvalueSequence& lambda, int k_max, std::size_t count,
                                     double tol = 1e-10, bool strict = false);

struct LaplacianResidual {
  double r = 0.0;
  Complex lhs;  // invariant Laplacian of B_k(S)
  Complex rhs;  // (k+1)(k+2)(B_k(S) - B_{k+1}(S))
  double residual = 0.0;
};

struct LaplacianIdentityReport {
  int k = 0;
  std::vector<LaplacianResidual> rows;
  double max_residual = 0.0;
};

/// Compares the invariant Laplacian of the k-th profile against
/// (k+1)(k+2)(B_k(S) - B_{k+1}(S)) at each radius.
LaplacianIdentityReport laplacian_identity_check(const EigenvalueSequence& lambda, int k,
                                                 std::span<const double> radii, double tol = 1e-13,
                                                 bool strict = false);

/// B_j(b) sampled on a t-grid reaching 1 - 1e-6 and interpolated (PCHIP).
RadialSymbol tabulate_berezin(const RadialSymbol& b, int j, const QuadratureConfig& config = {});

struct CommutativityRow {
  double r = 0.0;
  double kj = 0.0;  // B_k(B_j(b))(r)
  double jk = 0.0;  // B_j(B_k(b))(r)
  double residual = 0.0;
};

struct CommutativityReport {
  int j = 0;
  int k = 0;
  std::vector<CommutativityRow> rows;
  double max_residual = 0.0;
};

/// Nested transforms both ways; the inner one is tabulated once per order.
CommutativityReport commutativity_check(const RadialSymbol& b, int j, int k, std::span<const double> radii,
                                        const QuadratureConfig& config = {});

}  // namespace radtoep

#endif  // RADTOEP_BEREZIN_HPP
