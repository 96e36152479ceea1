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


// Essential-spectrum diagnostics for diagonal operators, whose essential
// spectrum is the set of limit points of the eigenvalues, and a generator
// that realizes a polyline as such a limit set.

#ifndef RADTOEP_SPECTRUM_HPP
#define RADTOEP_SPECTRUM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "radtoep/sequence.hpp"

namespace radtoep {

/// Polyline through vertices, parametrized by arc length.
class SpectrumPath {
 public:
  /// Needs at least one vertex; consecutive vertices must differ unless
  /// the path is a single point.
  explicit SpectrumPath(std::vector<Complex> vertices);

  const std::vector<Complex>& vertices() const noexcept { return vertices_; }
  /// cumulative[i] = arc length from vertex 0 to vertex i.
  const std::vector<double>& cumulative_lengths() const noexcept { return cumulative_; }
  double length() const noexcept { return cumulative_.back(); }

  /// Point at arc length s, clamped to [0, length()].
  Complex point_at(double s) const;

 private:
  std::vector<Complex> vertices_;
  std::vector<double> cumulative_;
};

/// Walks the path back and forth, the n-th step having arc length
/// speed/(n+1) (shrunk by a relative 1e-9 so rounding never pushes
/// (n+1)|Delta^1_n| past speed) and capped at the path length. The walk
/// reflects at both ends. Since the steps sum to infinity every point of
/// the path is a limit point, while the d1 seminorm stays <= speed.
EigenvalueSequence sequence_from_path(const SpectrumPath& path, std::size_t count, double speed);

struct LimitSet {
  /// Leaders of a greedy cover of the tail: every tail value lies within
  /// cluster_tol of some representative and representatives are more than
  /// cluster_tol apart.
  std::vector<Complex> representatives;
  /// Component label of each representative in the gap graph at
  /// 2 * cluster_tol (neighbouring leaders along a continuum are at most
  /// that far apart).
  std::vector<std::size_t> component;
  std::size_t component_count = 0;
  std::size_t tail_start = 0;
};

/// Finite-resolution estimate of the limit points of lambda from its values
/// with n >= (1 - tail_fraction) N. Needs at least 10 tail values.
LimitSet limit_points(const EigenvalueSequence& lambda, double tail_fraction, double cluster_tol);

/// Connected-component labels of the graph joining points at distance
/// <= gap_tol. Returns the number of components.
std::size_t gap_components(std::span<const Complex> points, double gap_tol, std::vector<std::size_t>& labels);

/// True iff the gap graph at gap_tol is connected. DomainError if empty.
bool connectedness_check(std::span<const Complex> points, double gap_tol);

/// Hausdorff distance between two nonempty finite point sets (brute force).
double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace radtoep

#endif  // RADTOEP_SPECTRUM_HPP
