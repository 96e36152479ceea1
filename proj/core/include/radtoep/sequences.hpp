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

// Finite-difference calculus on sequence windows.
//
//   difference(x, m, n)  = (-1)^m sum_j C(m,j) (-1)^j x_{n+j}
//   d1(x)                = max_n (n+1)   |Delta^1_n x|
//   d2(x)                = max_n (n+2)^2 |Delta^2_n x|
//   hausdorff(lambda,m,k)= (k+1) C(k,m) |Delta^m_{k-m} mu|,  mu_n = lambda_n/(n+1)
//
// Every quantity is a supremum over the indices the window can support, so
// all of them are lower bounds for the corresponding infinite-sequence
// seminorms.

#ifndef RADTOEP_SEQUENCES_HPP
#define RADTOEP_SEQUENCES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "radtoep/sequence.hpp"

namespace radtoep {

/// C(n, k). Exact (integer Pascal table) for n <= 64, log-gamma above.
/// Returns 0 for k < 0 or k > n.
double binomial(int n, int k);

/// m-th difference of x at position n. Requires n + m <= N - 1.
/// Orders up to 8 use the signed binomial sum; higher orders use repeated
/// first differences, which keeps cancellation under control.
Complex difference(const EigenvalueSequence& x, int m, std::size_t n);

/// Max of a windowed expression together with the index that attains it
/// (first index on ties).
struct WindowMax {
  double value = 0.0;
  std::size_t argmax = 0;
};

WindowMax sup_norm(const EigenvalueSequence& x);

/// max over 0 <= n <= N-2 of (n+1)|Delta^1_n x|. Needs N >= 2.
WindowMax d1_seminorm(const EigenvalueSequence& x);

/// max over 0 <= n <= N-3 of (n+2)^2 |Delta^2_n x|. Needs N >= 3.
WindowMax d2_seminorm(const EigenvalueSequence& x);

/// mu_n = lambda_n / (n+1).
EigenvalueSequence moment_sequence(const EigenvalueSequence& lambda);

/// (k+1) C(k,m) |Delta^m_{k-m} mu| with mu_n = lambda_n/(n+1).
/// Requires 0 <= m <= k <= N-1.
double hausdorff_value(const EigenvalueSequence& lambda, int m, int k);

/// All Hausdorff cells H(m,k) for 0 <= m <= m_max, m <= k <= k_max.
struct HausdorffGrid {
  int m_max = 0;
  int k_max = 0;
  /// rows[m][k - m] = H(m, k).
  std::vector<std::vector<double>> rows;
  std::vector<double> row_max;
  std::vector<int> row_argmax;  // the k attaining row_max[m]
  double max = 0.0;

  double at(int m, int k) const;
};

HausdorffGrid hausdorff_grid(const EigenvalueSequence& lambda, int m_max, int k_max);

/// Window sup norm, d1 and d2 seminorms, and optionally the Hausdorff grid
/// maximum. Fields that the window is too short for are left at zero.
struct SeminormReport {
  std::size_t window = 0;
  double sup_norm = 0.0;
  std::size_t sup_argmax = 0;
  double d1 = 0.0;
  std::size_t d1_argmax = 0;
  double d2 = 0.0;
  std::size_t d2_argmax = 0;
  std::optional<double> hausdorff_max;
};

SeminormReport seminorm_report(const EigenvalueSequence& x,
                               std::optional<int> hausdorff_m_max = std::nullopt,
                               std::optional<int> hausdorff_k_max = std::nullopt);

}  // namespace radtoep

#endif  // RADTOEP_SEQUENCES_HPP
