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

#include "radtoep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <queue>
#include <sstream>

#include "radtoep/errors.hpp"

namespace radtoep {

void QuadratureConfig::validate() const {
  if (nodes_per_panel < 2) throw DomainError("quadrature needs at least 2 nodes per panel");
  if (!(abs_tol > 0.0)) throw DomainError("quadrature abs_tol must be positive");
  if (max_panels < 1) throw DomainError("quadrature max_panels must be at least 1");
}

namespace {

GaussLegendreRule build_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi's initial guess for the i-th root, then Newton.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

double apply_rule(const GaussLegendreRule& rule, const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const GaussLegendreRule& rule, const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double whole = apply_rule(rule, f, a, b);
  const double halves = apply_rule(rule, f, a, mid) + apply_rule(rule, f, mid, b);
  return {a, b, halves, std::abs(whole - halves)};
}

}  // namespace

std::vector<double> geometric_cuts(double start, double end, int levels) {
  std::vector<double> cuts;
  cuts.reserve(static_cast<std::size_t>(std::max(levels, 0)));
  for (int j = 1; j <= levels; ++j) cuts.push_back(end - (end - start) * std::ldexp(1.0, -j));
  return cuts;
}

const GaussLegendreRule& GaussLegendreRule::of_order(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<GaussLegendreRule>(build_rule(n))).first;
  }
  return *it->second;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& config, std::span<const double> breakpoints) {
  config.validate();
  if (!(a <= b)) throw DomainError("integrate: lower limit exceeds upper limit");
  if (a == b) return {};
  const GaussLegendreRule& rule = GaussLegendreRule::of_order(config.nodes_per_panel);

  std::vector<double> cuts{a};
  for (double c : breakpoints) {
    if (c > a && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel> queue;
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Panel p = evaluate_panel(rule, f, cuts[i], cuts[i + 1]);
    total_error += p.error;
    queue.push(p);
  }

  int panels = static_cast<int>(queue.size());
  while (total_error > config.abs_tol) {
    const Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    const bool exhausted = !(mid > worst.a && mid < worst.b);
    if (panels >= config.max_panels || exhausted) {
      double value = 0.0;
      while (!queue.empty()) {
        value += queue.top().value;
        queue.pop();
      }
      std::ostringstream msg;
      msg << "adaptive quadrature on [" << a << ", " << b << "] stopped after " << panels
          << " panels with error estimate " << total_error << " > " << config.abs_tol;
      if (exhausted) msg << " (panel width reached rounding level)";
      throw ToleranceError(msg.str(), value, total_error);
    }
    queue.pop();
    const Panel left = evaluate_panel(rule, f, worst.a, mid);
    const Panel right = evaluate_panel(rule, f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }

  QuadratureResult result;
  result.panels = panels;
  // Sum in order of position so the value does not depend on heap layout.
  std::vector<Panel> all;
  all.reserve(queue.size());
  while (!queue.empty()) {
    all.push_back(queue.top());
    queue.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  for (const Panel& p : all) {
    result.value += p.value;
    result.error_estimate += p.error;
  }
  return result;
}

}  // namespace radtoep
