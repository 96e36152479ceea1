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

#include "radtoep/sequences.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "radtoep/parallel.hpp"

namespace radtoep {

namespace {

constexpr int kExactBinomialMax = 64;
constexpr int kDirectDifferenceMax = 8;

// C(64, 32) ~ 1.83e18 still fits in uint64_t.
using PascalTable = std::array<std::array<std::uint64_t, kExactBinomialMax + 1>, kExactBinomialMax + 1>;

const PascalTable& pascal_table() {
  static const PascalTable table = [] {
    PascalTable t{};
    for (int n = 0; n <= kExactBinomialMax; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

void require_difference_range(std::size_t size, int m, std::size_t n) {
  if (m < 0) throw RangeError("difference order must be non-negative, got " + std::to_string(m));
  if (n + static_cast<std::size_t>(m) >= size) {
    throw RangeError("difference of order " + std::to_string(m) + " at n=" + std::to_string(n) +
                     " needs index " + std::to_string(n + m) + " but the window has " +
                     std::to_string(size) + " entries");
  }
}

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  if (n <= kExactBinomialMax) return static_cast<double>(pascal_table()[n][k]);
  k = std::min(k, n - k);
  if (k == 0) return 1.0;
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

Complex difference(const EigenvalueSequence& x, int m, std::size_t n) {
  require_difference_range(x.size(), m, n);
  if (m <= kDirectDifferenceMax) {
    // (-1)^m sum_j C(m,j) (-1)^j x_{n+j} = sum_j C(m,j) (-1)^(m-j) x_{n+j}
    Complex acc{0.0, 0.0};
    for (int j = 0; j <= m; ++j) {
      const double sign = ((m - j) % 2 == 0) ? 1.0 : -1.0;
      acc += sign * binomial(m, j) * x[n + j];
    }
    return acc;
  }
  std::vector<Complex> work(x.begin() + static_cast<std::ptrdiff_t>(n),
                            x.begin() + static_cast<std::ptrdiff_t>(n + m + 1));
  for (int order = 0; order < m; ++order) {
    for (std::size_t i = 0; i + 1 < work.size() - order; ++i) work[i] = work[i + 1] - work[i];
  }
  return work[0];
}

WindowMax sup_norm(const EigenvalueSequence& x) {
  WindowMax out;
  for (std::size_t n = 0; n < x.size(); ++n) {
    const double v = std::abs(x[n]);
    if (v > out.value) out = {v, n};
  }
  return out;
}

WindowMax d1_seminorm(const EigenvalueSequence& x) {
  if (x.size() < 2) throw WindowError("d1 seminorm needs a window of at least 2 entries");
  WindowMax out;
  for (std::size_t n = 0; n + 1 < x.size(); ++n) {
    const double v = static_cast<double>(n + 1) * std::abs(x[n + 1] - x[n]);
    if (v > out.value) out = {v, n};
  }
  return out;
}

WindowMax d2_seminorm(const EigenvalueSequence& x) {
  if (x.size() < 3) throw WindowError("d2 seminorm needs a window of at least 3 entries");
  WindowMax out;
  for (std::size_t n = 0; n + 2 < x.size(); ++n) {
    const double w = static_cast<double>(n + 2);
    const double v = w * w * std::abs(x[n] - 2.0 * x[n + 1] + x[n + 2]);
    if (v > out.value) out = {v, n};
  }
  return out;
}

EigenvalueSequence moment_sequence(const EigenvalueSequence& lambda) {
  return EigenvalueSequence::generate(lambda.size(), [&](std::size_t n) {
    return lambda[n] / static_cast<double>(n + 1);
  });
}

namespace {

double hausdorff_cell(const EigenvalueSequence& mu, int m, int k) {
  return (k + 1.0) * binomial(k, m) * std::abs(difference(mu, m, static_cast<std::size_t>(k - m)));
}

void require_hausdorff_range(std::size_t size, int m, int k) {
  if (m < 0 || m > k) {
    throw RangeError("Hausdorff cell needs 0 <= m <= k, got m=" + std::to_string(m) +
                     ", k=" + std::to_string(k));
  }
  if (static_cast<std::size_t>(k) >= size) {
    throw RangeError("Hausdorff cell k=" + std::to_string(k) + " outside window of " +
                     std::to_string(size) + " entries");
  }
}

}  // namespace

double hausdorff_value(const EigenvalueSequence& lambda, int m, int k) {
  require_hausdorff_range(lambda.size(), m, k);
  return hausdorff_cell(moment_sequence(lambda), m, k);
}

double HausdorffGrid::at(int m, int k) const {
  if (m < 0 || m > m_max || k < m || k > k_max) {
    throw RangeError("Hausdorff grid has no cell (" + std::to_string(m) + ", " + std::to_string(k) + ")");
  }
  return rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - m)];
}

HausdorffGrid hausdorff_grid(const EigenvalueSequence& lambda, int m_max, int k_max) {
  if (m_max < 0 || m_max > k_max) {
    throw RangeError("Hausdorff grid needs 0 <= m_max <= k_max");
  }
  require_hausdorff_range(lambda.size(), m_max, k_max);
  const EigenvalueSequence mu = moment_sequence(lambda);

  HausdorffGrid grid;
  grid.m_max = m_max;
  grid.k_max = k_max;
  grid.rows.resize(static_cast<std::size_t>(m_max) + 1);
  grid.row_max.assign(grid.rows.size(), 0.0);
  grid.row_argmax.assign(grid.rows.size(), 0);

  parallel_for(grid.rows.size(), [&](std::size_t row) {
    const int m = static_cast<int>(row);
    auto& cells = grid.rows[row];
    cells.resize(static_cast<std::size_t>(k_max - m) + 1);
    grid.row_argmax[row] = m;
    for (int k = m; k <= k_max; ++k) {
      const double h = hausdorff_cell(mu, m, k);
      cells[static_cast<std::size_t>(k - m)] = h;
      if (h > grid.row_max[row]) {
        grid.row_max[row] = h;
        grid.row_argmax[row] = k;
      }
    }
  });
  grid.max = *std::max_element(grid.row_max.begin(), grid.row_max.end());
  return grid;
}

SeminormReport seminorm_report(const EigenvalueSequence& x, std::optional<int> hausdorff_m_max,
                               std::optional<int> hausdorff_k_max) {
  SeminormReport report;
  report.window = x.size();
  const WindowMax sup = sup_norm(x);
  report.sup_norm = sup.value;
  report.sup_argmax = sup.argmax;
  if (x.size() >= 2) {
    const WindowMax d1 = d1_seminorm(x);
    report.d1 = d1.value;
    report.d1_argmax = d1.argmax;
  }
  if (x.size() >= 3) {
    const WindowMax d2 = d2_seminorm(x);
    report.d2 = d2.value;
    report.d2_argmax = d2.argmax;
  }
  if (hausdorff_m_max) {
    const int k_max = hausdorff_k_max.value_or(static_cast<int>(x.size()) - 1);
    report.hausdorff_max = hausdorff_grid(x, *hausdorff_m_max, k_max).max;
  }
  return report;
}

}  // namespace radtoep
