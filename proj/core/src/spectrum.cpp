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


#include "radtoep/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "radtoep/errors.hpp"

namespace radtoep {

SpectrumPath::SpectrumPath(std::vector<Complex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("spectrum path needs at least one vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!std::isfinite(vertices_[i].real()) || !std::isfinite(vertices_[i].imag())) {
      throw DomainError("spectrum path vertex " + std::to_string(i) + " is not finite");
    }
  }
  cumulative_.assign(vertices_.size(), 0.0);
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const double len = std::abs(vertices_[i] - vertices_[i - 1]);
    if (len == 0.0) throw DomainError("spectrum path vertices " + std::to_string(i - 1) + " and " +
                                      std::to_string(i) + " coincide");
    cumulative_[i] = cumulative_[i - 1] + len;
  }
}

Complex SpectrumPath::point_at(double s) const {
  if (vertices_.size() == 1) return vertices_.front();
  s = std::clamp(s, 0.0, length());
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t i = it == cumulative_.begin() ? 0 : static_cast<std::size_t>(it - cumulative_.begin()) - 1;
  i = std::min(i, vertices_.size() - 2);
  const double seg = cumulative_[i + 1] - cumulative_[i];
  const double frac = std::clamp((s - cumulative_[i]) / seg, 0.0, 1.0);
  return vertices_[i] + frac * (vertices_[i + 1] - vertices_[i]);
}

EigenvalueSequence sequence_from_path(const SpectrumPath& path, std::size_t count, double speed) {
  if (count < 2) throw WindowError("path sequence needs a window of at least 2");
  if (!(speed > 0.0) || !std::isfinite(speed)) throw DomainError("walk speed must be positive and finite");
  const double total = path.length();
  std::vector<Complex> out(count);
  double s = 0.0;
  double direction = 1.0;
  out[0] = path.point_at(0.0);
  for (std::size_t n = 0; n + 1 < count; ++n) {
    const double step = std::min(speed / (static_cast<double>(n) + 1.0) * (1.0 - 1e-9), total);
    double next = s + direction * step;
    if (next > total) {
      next = 2.0 * total - next;
      direction = -1.0;
    } else if (next < 0.0) {
      next = -next;
      direction = 1.0;
    }
    s = next;
    out[n + 1] = path.point_at(s);
  }
  return EigenvalueSequence(std::move(out));
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

using Cell = std::pair<long long, long long>;

Cell cell_of(Complex p, double size) {
  return {static_cast<long long>(std::floor(p.real() / size)), static_cast<long long>(std::floor(p.imag() / size))};
}

}  // namespace

std::size_t gap_components(std::span<const Complex> points, double gap_tol, std::vector<std::size_t>& labels) {
  if (points.empty()) throw DomainError("gap graph needs at least one point");
  if (!(gap_tol >= 0.0) || !std::isfinite(gap_tol)) throw DomainError("gap tolerance must be finite and >= 0");
  DisjointSets sets(points.size());
  if (gap_tol == 0.0) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (points[i] == points[j]) sets.unite(i, j);
      }
    }
  } else {
    // Cells of side gap_tol / sqrt(2): points sharing a cell are always
    // joined, and a joining pair is at most two cells apart on each axis.
    const double size = gap_tol / std::sqrt(2.0);
    std::map<Cell, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < points.size(); ++i) cells[cell_of(points[i], size)].push_back(i);
    for (const auto& [cell, members] : cells) {
      for (std::size_t i = 1; i < members.size(); ++i) sets.unite(members[0], members[i]);
    }
    for (const auto& [cell, members] : cells) {
      for (long long dx = -2; dx <= 2; ++dx) {
        for (long long dy = -2; dy <= 2; ++dy) {
          const Cell other{cell.first + dx, cell.second + dy};
          if (!(cell < other)) continue;
          auto it = cells.find(other);
          if (it == cells.end()) continue;
          if (sets.find(members[0]) == sets.find(it->second[0])) continue;
          bool joined = false;
          for (std::size_t a : members) {
            for (std::size_t b : it->second) {
              if (std::abs(points[a] - points[b]) <= gap_tol) {
                sets.unite(a, b);
                joined = true;
                break;
              }
            }
            if (joined) break;
          }
        }
      }
    }
  }
  labels.assign(points.size(), 0);
  std::map<std::size_t, std::size_t> relabel;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t root = sets.find(i);
    auto [it, inserted] = relabel.emplace(root, relabel.size());
    labels[i] = it->second;
  }
  return relabel.size();
}

bool connectedness_check(std::span<const Complex> points, double gap_tol) {
  std::vector<std::size_t> labels;
  return gap_components(points, gap_tol, labels) == 1;
}

LimitSet limit_points(const EigenvalueSequence& lambda, double tail_fraction, double cluster_tol) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) throw DomainError("tail fraction must lie in (0, 1]");
  if (!(cluster_tol > 0.0) || !std::isfinite(cluster_tol)) throw DomainError("cluster tolerance must be positive");
  const std::size_t count = lambda.size();
  const auto start =
      static_cast<std::size_t>(std::ceil((1.0 - tail_fraction) * static_cast<double>(count) - 1e-9));
  if (count < start + 10) {
    std::ostringstream msg;
    msg << "tail of " << (count > start ? count - start : 0) << " values is too short; need at least 10";
    throw WindowError(msg.str());
  }

  LimitSet out;
  out.tail_start = start;
  std::map<Cell, std::vector<std::size_t>> grid;
  for (std::size_t n = start; n < count; ++n) {
    const Complex p = lambda[n];
    const Cell c = cell_of(p, cluster_tol);
    bool covered = false;
    for (long long dx = -1; dx <= 1 && !covered; ++dx) {
      for (long long dy = -1; dy <= 1 && !covered; ++dy) {
        auto it = grid.find({c.first + dx, c.second + dy});
        if (it == grid.end()) continue;
        for (std::size_t leader : it->second) {
          if (std::abs(out.representatives[leader] - p) <= cluster_tol) {
            covered = true;
            break;
          }
        }
      }
    }
    if (!covered) {
      grid[c].push_back(out.representatives.size());
      out.representatives.push_back(p);
    }
  }
  out.component_count = gap_components(out.representatives, 2.0 * cluster_tol, out.component);
  return out;
}

double hausdorff_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) throw DomainError("Hausdorff distance needs nonempty sets");
  auto directed = [](std::span<const Complex> from, std::span<const Complex> to) {
    double worst = 0.0;
    for (const Complex& p : from) {
      double best = std::abs(p - to[0]);
      for (const Complex& q : to) best = std::min(best, std::abs(p - q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace radtoep
