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
#include <complex>
#include <vector>

#include "radtoep/errors.hpp"
#include "radtoep/moments.hpp"
#include "radtoep/sequences.hpp"

using namespace radtoep;

namespace {

// lambda_n of sin(beta ln(1/(1-t))) is Im (n+1) B(n+1, 1 - i beta)
// = Im prod_{j=1}^{n+1} (1 - i beta / j)^{-1}.
double log_oscillation_oracle(double beta, std::size_t n) {
  std::complex<long double> p = 1.0L;
  for (std::size_t j = 1; j <= n + 1; ++j) {
    p /= std::complex<long double>(1.0L, -static_cast<long double>(beta) / static_cast<long double>(j));
  }
  return static_cast<double>(p.imag());
}

RadialSymbol sampled(double (*f)(double), int count) {
  std::vector<double> t(static_cast<std::size_t>(count));
  std::vector<double> v(t.size());
  for (int i = 0; i < count; ++i) {
    t[i] = static_cast<double>(i) / (count - 1);
    v[i] = f(t[i]);
  }
  return RadialSymbol::tabulated(t, v);
}

RadialSymbol spike() {
  return RadialSymbol::tabulated({0.0, 0.5, 0.52, 0.55, 0.58, 0.6, 1.0}, {0.0, 0.0, 0.0, 1000.0, 0.0, 0.0, 0.0});
}

}  // namespace

TEST_CASE("symbol constructors validate their parameters") {
  CHECK_THROWS_AS(RadialSymbol::power(-0.5), DomainError);
  CHECK_THROWS_AS(RadialSymbol::constant(INFINITY), DomainError);
  CHECK_THROWS_AS(RadialSymbol::indicator(0.0), DomainError);
  CHECK_THROWS_AS(RadialSymbol::indicator(1.0), DomainError);
  CHECK_THROWS_AS(RadialSymbol::piecewise({0.0, 1.0}, {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(RadialSymbol::piecewise({0.0, 0.6, 0.4, 1.0}, {1.0, 2.0, 3.0}), DomainError);
  CHECK_THROWS_AS(RadialSymbol::piecewise({0.1, 1.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(RadialSymbol::tabulated({0.0, 0.5, 1.0}, {1.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(RadialSymbol::tabulated({0.0, 0.5, 0.4, 1.0}, {1.0, 1.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(RadialSymbol::tabulated({0.0, 0.5, 0.7, 1.5}, {1.0, 1.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(RadialSymbol::constant(2.0).with_sup_bound(1.0), DomainError);
  CHECK_THROWS_AS(RadialSymbol::constant(2.0).with_sup_bound(-1.0), DomainError);
  CHECK(RadialSymbol::constant(2.0).with_sup_bound(3.0).sup_bound() == 3.0);
}

TEST_CASE("symbol evaluation and metadata") {
  const auto ind = RadialSymbol::indicator(0.5);
  CHECK(ind.kind() == RadialSymbol::Kind::kPiecewise);
  CHECK(ind(0.7) == 0.0);
  CHECK(ind(0.71) == 1.0);
  CHECK(ind.breakpoints_t() == std::vector<double>{0.5});
  CHECK(ind.sup_bound() == 1.0);

  const auto p = RadialSymbol::power(2.0);
  CHECK(p(0.5) == doctest::Approx(0.0625));
  CHECK(p.kind_name() == "power");
  CHECK(p.power_exponent() == 2.0);
  CHECK_THROWS_AS(p.constant_value(), DomainError);

  const auto osc = RadialSymbol::log_oscillation(2.0);
  CHECK(osc.at_t(1.0 - 1e-300, 1e-300) == doctest::Approx(std::sin(2.0 * 300.0 * std::log(10.0))));
  CHECK(osc.at_t(1.0, 0.0) == 0.0);

  const auto tab = RadialSymbol::tabulated({0.2, 0.4, 0.6, 0.8}, {1.0, 2.0, 3.0, 4.0});
  CHECK(tab.at_t(0.0) == 1.0);
  CHECK(tab.at_t(0.9) == 4.0);
  CHECK(tab.at_t(0.5) == doctest::Approx(2.5));
}

TEST_CASE("power symbols match the closed form (n+1)/(n+s+1)") {
  for (double s : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    const auto lambda = eigenvalues_of_symbol(RadialSymbol::power(s), 201);
    for (std::size_t n = 0; n < lambda.size(); ++n) {
      const double expect = (n + 1.0) / (n + s + 1.0);
      CHECK(std::abs(lambda[n].real() - expect) <= 1e-9 * expect);
      CHECK(lambda[n].imag() == 0.0);
    }
  }
}

TEST_CASE("piecewise symbols use exact moments") {
  const auto lambda = eigenvalues_of_symbol(RadialSymbol::indicator(0.5), 100);
  for (std::size_t n = 0; n < 100; ++n) CHECK(lambda[n].real() == doctest::Approx(1.0 - std::pow(0.5, n + 1.0)));

  const auto pw = RadialSymbol::piecewise({0.0, 0.25, 0.75, 1.0}, {2.0, -1.0, 0.5});
  CHECK(eigenvalue_of_symbol(pw, 0) == doctest::Approx(0.5 - 0.5 + 0.125));
  CHECK(eigenvalue_of_symbol(RadialSymbol::constant(-3.0), 17) == -3.0);
}

TEST_CASE("log-oscillating symbols match the Beta-function oracle") {
  for (double beta : {0.5, 1.0, 2.0}) {
    const auto lambda = eigenvalues_of_symbol(RadialSymbol::log_oscillation(beta), 300);
    CHECK(lambda[0].real() == doctest::Approx(beta / (1.0 + beta * beta)).epsilon(1e-10));
    for (std::size_t n = 0; n < lambda.size(); n += 7) {
      CHECK(std::abs(lambda[n].real() - log_oscillation_oracle(beta, n)) <= 1e-12);
    }
  }
}

TEST_CASE("tabulated symbols reproduce the sampled function") {
  const auto tab = sampled([](double t) { return t * t; }, 2001);
  const auto lambda = eigenvalues_of_symbol(tab, 200);
  for (std::size_t n = 0; n < lambda.size(); ++n) {
    CHECK(std::abs(lambda[n].real() - (n + 1.0) / (n + 3.0)) <= 1e-6);
  }
}

TEST_CASE("eigenvalues are linear in the symbol") {
  const std::vector<double> cuts{0.0, 0.3, 0.6, 1.0};
  const auto b1 = RadialSymbol::piecewise(cuts, {1.0, -2.0, 0.25});
  const auto b2 = RadialSymbol::piecewise(cuts, {0.5, 3.0, -1.0});
  const auto sum = RadialSymbol::piecewise(cuts, {2.0 * 1.0 - 3.0 * 0.5, 2.0 * -2.0 - 3.0 * 3.0, 2.0 * 0.25 + 3.0});
  const auto l1 = eigenvalues_of_symbol(b1, 60);
  const auto l2 = eigenvalues_of_symbol(b2, 60);
  const auto ls = eigenvalues_of_symbol(sum, 60);
  for (std::size_t n = 0; n < 60; ++n) CHECK(std::abs(ls[n] - (2.0 * l1[n] - 3.0 * l2[n])) <= 1e-13);

  // affine maps with positive slope commute with monotone cubic interpolation
  const std::vector<double> t{0.0, 0.1, 0.3, 0.35, 0.6, 0.9, 1.0};
  const std::vector<double> v{0.0, 1.0, -0.5, 0.2, 0.8, 0.1, 0.3};
  std::vector<double> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = 2.5 * v[i] + 0.75;
  const auto lv = eigenvalues_of_symbol(RadialSymbol::tabulated(t, v), 80);
  const auto lw = eigenvalues_of_symbol(RadialSymbol::tabulated(t, w), 80);
  for (std::size_t n = 0; n < 80; ++n) CHECK(std::abs(lw[n] - (2.5 * lv[n] + 0.75)) <= 1e-9);
}

TEST_CASE("non-negative symbols give non-negative eigenvalues") {
  for (const auto& b : {RadialSymbol::indicator(0.9), RadialSymbol::power(3.0),
                        RadialSymbol::tabulated({0.0, 0.4, 0.5, 1.0}, {0.0, 0.0, 1.0, 0.0})}) {
    const auto lambda = eigenvalues_of_symbol(b, 150);
    for (const auto& v : lambda) CHECK(v.real() >= -1e-12);
  }
}

TEST_CASE("first differences decay like 1/n for bounded symbols") {
  const std::size_t N = 400;
  for (const auto& b : {RadialSymbol::indicator(0.5), RadialSymbol::log_oscillation(1.0),
                        RadialSymbol::log_oscillation(3.0), RadialSymbol::power(0.5)}) {
    CAPTURE(b.kind_name());
    const auto lambda = eigenvalues_of_symbol(b, N);
    CHECK(d1_seminorm(lambda).value <= 4.0 * b.sup_bound() + 1e-8);
    double tail = 0.0;
    for (std::size_t n = N / 2; n + 1 < N; ++n) tail = std::max(tail, std::abs(difference(lambda, 1, n)));
    CHECK(tail <= 8.0 * b.sup_bound() / static_cast<double>(N / 2));
    CHECK(sup_norm_estimate(lambda) <= b.sup_bound() + 1e-8);
  }
}

TEST_CASE("sup norm estimate is the window maximum") {
  const auto lambda = eigenvalues_of_symbol(RadialSymbol::indicator(0.5), 30);
  CHECK(sup_norm_estimate(lambda) == doctest::Approx(1.0 - std::pow(0.5, 30.0)));
  CHECK(sup_norm_estimate(eigenvalues_of_symbol(RadialSymbol::constant(-2.0), 5)) == 2.0);
}

TEST_CASE("lcon constant on reference symbols") {
  const LconEstimate c = lcon_constant(RadialSymbol::constant(-2.0));
  CHECK(c.constant == doctest::Approx(2.0));
  CHECK(c.grid_points == 96);

  const LconEstimate ind = lcon_constant(RadialSymbol::indicator(0.5));
  CHECK(ind.constant == doctest::Approx(1.0));
  CHECK(ind.t_at_max >= 0.5);

  CHECK(lcon_constant(RadialSymbol::power(1.0)).constant == doctest::Approx(1.0).epsilon(1e-12));

  // G(t)/(1-t) = Im (1-t)^{-i beta} / (1 - i beta), whose supremum is 1/sqrt(1 + beta^2)
  for (double beta : {0.5, 1.0, 2.0}) {
    const double sup = 1.0 / std::sqrt(1.0 + beta * beta);
    const double est = lcon_constant(RadialSymbol::log_oscillation(beta)).constant;
    CHECK(est <= sup + 1e-9);
    CHECK(est >= 0.9 * sup);
  }
  CHECK_THROWS_AS(lcon_constant(RadialSymbol::constant(1.0), 1), DomainError);
}

TEST_CASE("corollary bounds hold on constant, indicator and oscillating symbols") {
  for (const auto& b : {RadialSymbol::constant(1.0), RadialSymbol::indicator(0.5), RadialSymbol::log_oscillation(1.0)}) {
    CAPTURE(b.kind_name());
    const CorollaryReport r = corollary_bounds_check(b, 500);
    CHECK(r.passed());
    CHECK(r.failures.empty());
    CHECK(r.window == 500);
    CHECK(r.tol == doctest::Approx(10.0 * 1e-10 * 500));
    CHECK(r.sup_norm <= r.lcon + r.tol);
  }
  const CorollaryReport ind = corollary_bounds_check(RadialSymbol::indicator(0.5), 500);
  CHECK(ind.lcon == doctest::Approx(1.0));
  CHECK(ind.d2 == doctest::Approx(0.5625));
  CHECK(ind.kernel_max == doctest::Approx(1.125));
}

TEST_CASE("a spike hidden from the declared bound fails the kernel clause") {
  const auto b = spike().with_sup_bound(0.01);
  const CorollaryReport r = corollary_bounds_check(b, 200);
  CHECK_FALSE(r.kernel_clause);
  CHECK_FALSE(r.passed());
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.kernel_max > 8.0 * 0.01);
}

TEST_CASE("moment argument and tolerance errors") {
  CHECK_THROWS_AS(eigenvalues_of_symbol(RadialSymbol::constant(1.0), 0), WindowError);
  CHECK_THROWS_AS(corollary_bounds_check(RadialSymbol::constant(1.0), 2), WindowError);
  QuadratureConfig tight;
  tight.max_panels = 2;
  tight.nodes_per_panel = 2;
  CHECK_THROWS_AS(eigenvalues_of_symbol(RadialSymbol::log_oscillation(1.0), 10, tight), ToleranceError);
  QuadratureConfig bad;
  bad.abs_tol = -1.0;
  CHECK_THROWS_AS(eigenvalues_of_symbol(RadialSymbol::power(1.0), 3, bad), DomainError);
}
