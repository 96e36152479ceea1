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

#ifndef RADTOEP_QUADRATURE_HPP
#define RADTOEP_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace radtoep {

struct QuadratureConfig {
  int nodes_per_panel = 32;
  double abs_tol = 1e-10;
  int max_panels = 4000;

  /// Throws DomainError unless nodes_per_panel >= 2, abs_tol > 0 and
  /// max_panels >= 1.
  void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1]. Rules are computed once per
/// order by Newton iteration on the Legendre recurrence and cached.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  static const GaussLegendreRule& of_order(int n);
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Points end - (end - start) 2^{-j} for j = 1..levels. As breakpoints they
/// give panels that shrink geometrically toward end, which keeps the error
/// estimate honest for integrands oscillating without bound there.
std::vector<double> geometric_cuts(double start, double end, int levels);

/// Geometric levels used for boundary oscillation; the last panel has
/// relative width 2^{-48}.
inline constexpr int kBoundaryCutLevels = 48;

/// Globally adaptive panel Gauss-Legendre quadrature of f over [a, b].
///
/// Each panel is integrated once whole and once as two halves; the
/// difference is the panel's error estimate and the halves' sum its value.
/// The panel with the largest estimate is bisected until the total estimate
/// drops below abs_tol. Optional breakpoints inside (a, b) seed the initial
/// panels so that jumps of f fall on panel boundaries.
///
/// Throws ToleranceError (carrying the achieved estimate) when max_panels is
/// reached first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& config, std::span<const double> breakpoints = {});

}  // namespace radtoep

#endif  // RADTOEP_QUADRATURE_HPP
