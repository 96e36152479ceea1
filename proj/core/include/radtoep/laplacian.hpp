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


// The invariant Laplacian on radial operators acts on eigenvalues as
//
//   gamma_0 = 2 (lambda_1 - lambda_0),
//   gamma_n = (n+1) [(n+2)(lambda_{n+1} - lambda_n) - n (lambda_n - lambda_{n-1})].
//
// With b_n = n (lambda_n - lambda_{n-1}) this reads gamma_n = (n+2) b_{n+1} - (n+1) b_n,
// which telescopes and gives the inverse map.

#ifndef RADTOEP_LAPLACIAN_HPP
#define RADTOEP_LAPLACIAN_HPP

#include <cstddef>
#include <string_view>

#include "radtoep/sequence.hpp"

namespace radtoep {

/// gamma_0..gamma_{N-2} from lambda_0..lambda_{N-1}; WindowError if N < 2.
GammaSequence gamma_of_lambda(const EigenvalueSequence& lambda);

/// Inverse of gamma_of_lambda given lambda_0: b_{n+1} = (sum_{j<=n} gamma_j) / (n+2),
/// lambda_{n+1} = lambda_n + b_{n+1} / (n+1). Both running sums are compensated.
EigenvalueSequence lambda_of_gamma(const GammaSequence& gamma, Complex lambda0);

enum class EquivalenceStatus { kHolds, kViolated, kWindowInconclusive };

std::string_view to_string(EquivalenceStatus status) noexcept;

struct NormEquivalenceReport {
  std::size_t window = 0;
  double d2 = 0.0;
  std::size_t d2_argmax = 0;
  double gamma_sup = 0.0;
  std::size_t gamma_argmax = 0;
  double lower = 0.0;  // d2 / 6
  double upper = 0.0;  // 6 d2
  EquivalenceStatus status = EquivalenceStatus::kHolds;
  /// |b_{n+1}| <= max_{j<=n} |gamma_j| at every index of the window.
  bool telescoping_bound_holds = true;
};

/// Checks d2/6 <= sup|gamma| <= 6 d2 on the window. A failure whose
/// suprema sit in the last quarter of the window is reported as
/// window-inconclusive, since the infinite-sequence norms may lie beyond it.
NormEquivalenceReport norm_equivalence_check(const EigenvalueSequence& lambda);

/// (1-r^2)^2 sum_n gamma_n (n+1) r^{2n}, the invariant Laplacian of the
/// classical Berezin transform expressed through gamma.
Complex laplacian_series_value(const GammaSequence& gamma, double r);

}  // namespace radtoep

#endif  // RADTOEP_LAPLACIAN_HPP
