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


#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "radtoep/errors.hpp"
#include "radtoep/quadrature.hpp"

using namespace radtoep;

TEST_CASE("Gauss-Legendre rules integrate polynomials up to degree 2n-1 exactly") {
  for (int n : {2, 3, 5, 8, 16, 32, 64}) {
    CAPTURE(n);
    const auto& rule = GaussLegendreRule::of_order(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    double weight_sum = 0.0;
    for (double w : rule.weights) {
      CHECK(w > 0.0);
      weight_sum += w;
    }
    CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));
    for (int degree = 0; degree <= 2 * n - 1; ++degree) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], degree);
      const double exact = degree % 2 ? 0.0 : 2.0 / (degree + 1.0);
      CHECK(std::abs(sum - exact) <= 1e-13);
    }
  }
}

TEST_CASE("Gauss-Legendre nodes are symmetric and sorted") {
  const auto& rule = GaussLegendreRule::of_order(33);
  for (std::size_t i = 0; i + 1 < rule.nodes.size(); ++i) CHECK(rule.nodes[i] < rule.nodes[i + 1]);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[rule.nodes.size() - 1 - i]).epsilon(1e-15));
  }
  CHECK(&GaussLegendreRule::of_order(33) == &rule);
}

TEST_CASE("adaptive integration of smooth and singular integrands") {
  const QuadratureConfig config;
  CHECK(integrate([](double x) { return std::exp(x); }, 0.0, 1.0, config).value ==
        doctest::Approx(std::numbers::e - 1.0).epsilon(1e-14));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, config).value ==
        doctest::Approx(2.0).epsilon(1e-14));
  // integrable endpoint singularity
  const QuadratureResult r = integrate([](double x) { return x > 0 ? 1.0 / std::sqrt(x) : 0.0; }, 0.0, 1.0, config);
  CHECK(std::abs(r.value - 2.0) <= 1e-8);
  CHECK(r.panels > 1);
  // log singularity
  CHECK(std::abs(integrate([](double x) { return x > 0 ? std::log(x) : 0.0; }, 0.0, 1.0, config).value + 1.0) <=
        1e-9);
}

TEST_CASE("breakpoints let jumps integrate exactly") {
  auto step = [](double x) { return x < 0.3 ? 1.0 : (x < 0.7 ? -2.0 : 0.5); };
  const std::vector<double> cuts{0.3, 0.7};
  const QuadratureResult r = integrate(step, 0.0, 1.0, {}, cuts);
  CHECK(r.value == doctest::Approx(0.3 - 0.8 + 0.15).epsilon(1e-14));
  // cuts outside the interval or duplicated are harmless
  const std::vector<double> messy{-1.0, 0.7, 0.3, 0.3, 2.0};
  CHECK(integrate(step, 0.0, 1.0, {}, messy).value == doctest::Approx(r.value).epsilon(1e-14));
}

TEST_CASE("reversed intervals are rejected and empty ones vanish") {
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 0.0, {}), DomainError);
  CHECK(integrate([](double x) { return x; }, 0.5, 0.5, {}).value == 0.0);
}

TEST_CASE("running out of panels raises ToleranceError with the estimate") {
  QuadratureConfig config;
  config.max_panels = 2;
  config.nodes_per_panel = 4;
  auto wild = [](double x) { return std::sin(200.0 * x); };
  try {
    integrate(wild, 0.0, 1.0, config);
    FAIL("expected ToleranceError");
  } catch (const ToleranceError& e) {
    CHECK(e.error_estimate() > config.abs_tol);
    CHECK(std::isfinite(e.estimate()));
  }
}

TEST_CASE("quadrature config validation") {
  QuadratureConfig config;
  CHECK_NOTHROW(config.validate());
  config.nodes_per_panel = 1;
  CHECK_THROWS_AS(config.validate(), DomainError);
  config = {};
  config.abs_tol = 0.0;
  CHECK_THROWS_AS(config.validate(), DomainError);
  config = {};
  config.max_panels = 0;
  CHECK_THROWS_AS(config.validate(), DomainError);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, config), DomainError);
}

TEST_CASE("geometric cuts approach the chosen end") {
  const auto up = geometric_cuts(0.0, 1.0, 4);
  CHECK(up == std::vector<double>{0.5, 0.75, 0.875, 0.9375});
  const auto down = geometric_cuts(1.0, 0.0, 3);
  CHECK(down == std::vector<double>{0.5, 0.25, 0.125});
  CHECK(geometric_cuts(0.0, 1.0, 0).empty());
}

TEST_CASE("geometric cuts resolve an endpoint oscillation") {
  // int_0^1 sin(ln(1 - t)) dt = -1/2
  auto f = [](double t) { return t < 1.0 ? std::sin(std::log1p(-t)) : 0.0; };
  const auto cuts = geometric_cuts(0.0, 1.0, kBoundaryCutLevels);
  CHECK(std::abs(integrate(f, 0.0, 1.0, {}, cuts).value + 0.5) <= 1e-13);
}
