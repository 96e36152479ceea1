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
#include <random>

#include "oracles.hpp"
#include "radtoep/errors.hpp"
#include "radtoep/laplacian.hpp"
#include "radtoep/sequences.hpp"

using namespace radtoep;

namespace {

EigenvalueSequence harmonic(std::size_t count) {
  return EigenvalueSequence::generate(count, [](std::size_t n) { return 1.0 / (n + 1.0); });
}

// gamma_n straight from the defining formula, in long double.
Complex direct_gamma(const std::vector<Complex>& x, std::size_t n) {
  using L = std::complex<long double>;
  auto at = [&](std::size_t i) { return L(x[i].real(), x[i].imag()); };
  if (n == 0) {
    const L g = 2.0L * (at(1) - at(0));
    return {static_cast<double>(g.real()), static_cast<double>(g.imag())};
  }
  const long double nn = static_cast<long double>(n);
  const L g = (nn + 1) * ((nn + 2) * (at(n + 1) - at(n)) - nn * (at(n) - at(n - 1)));
  return {static_cast<double>(g.real()), static_cast<double>(g.imag())};
}

}  // namespace

TEST_CASE("gamma of reference sequences") {
  const GammaSequence flat = gamma_of_lambda(EigenvalueSequence::generate(10, [](std::size_t) { return 3.0; }));
  CHECK(flat.size() == 9);
  for (const auto& g : flat) CHECK(g == Complex(0.0));

  const GammaSequence h = gamma_of_lambda(harmonic(100));
  CHECK(h[0].real() == doctest::Approx(-1.0).epsilon(1e-15));
  for (std::size_t n = 1; n < h.size(); ++n) CHECK(std::abs(h[n]) <= 1e-12);

  const GammaSequence lin = gamma_of_lambda(EigenvalueSequence::generate(50, [](std::size_t n) { return n + 1.0; }));
  CHECK(lin[0] == Complex(2.0));
  for (std::size_t n = 1; n < lin.size(); ++n) CHECK(lin[n].real() == doctest::Approx(2.0 * (n + 1.0)));

  CHECK_THROWS_AS(gamma_of_lambda(EigenvalueSequence::from_real(std::vector<double>{1.0})), WindowError);
}

TEST_CASE("gamma matches the defining formula on random windows") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    auto v = oracle::random_real_window(rng, 200);
    for (std::size_t n = 0; n < v.size(); n += 3) v[n] = Complex(v[n].real(), -0.5 * v[n].real());
    const GammaSequence g = gamma_of_lambda(EigenvalueSequence(v));
    for (std::size_t n = 0; n < g.size(); ++n) {
      const Complex expect = direct_gamma(v, n);
      CHECK(std::abs(g[n] - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST_CASE("inverse map examples") {
  const GammaSequence zero(std::vector<Complex>(20, Complex(0.0)));
  const EigenvalueSequence c = lambda_of_gamma(zero, Complex(0.25, -1.0));
  CHECK(c.size() == 21);
  for (const auto& v : c) CHECK(v == Complex(0.25, -1.0));

  std::vector<Complex> pulse(500, Complex(0.0));
  pulse[0] = -1.0;
  const EigenvalueSequence h = lambda_of_gamma(GammaSequence(pulse), 1.0);
  for (std::size_t n = 0; n < h.size(); ++n) CHECK(h[n].real() == doctest::Approx(1.0 / (n + 1.0)).epsilon(1e-14));
}

TEST_CASE("gamma round trip is exact to 1e-12") {
  std::mt19937_64 rng(99);
  // Rough windows lose about n^{3/2} ulps in the stored gamma values, so
  // they stay short; d1-bounded windows are long.
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> v;
    if (trial < 10) {
      v = oracle::random_real_window(rng, 100);
    } else {
      for (double x : oracle::random_d1_bounded(rng, 5000)) v.push_back(x);
    }
    if (trial % 2) {
      for (auto& x : v) x = Complex(x.real(), 0.3 * x.real() * x.real());
    }
    const EigenvalueSequence lambda(v);
    const EigenvalueSequence back = lambda_of_gamma(gamma_of_lambda(lambda), lambda[0]);
    REQUIRE(back.size() == lambda.size());
    for (std::size_t n = 0; n < v.size(); ++n) CHECK(std::abs(back[n] - v[n]) <= 1e-12 * std::max(1.0, std::abs(v[n])));
  }
  for (const auto& lambda : {harmonic(10000), EigenvalueSequence::generate(10000, [](std::size_t n) {
                               return std::sin(2.0 * std::log(n + 1.0));
                             })}) {
    const EigenvalueSequence back = lambda_of_gamma(gamma_of_lambda(lambda), lambda[0]);
    for (std::size_t n = 0; n < lambda.size(); ++n) CHECK(std::abs(back[n] - lambda[n]) <= 1e-12);
  }
}

TEST_CASE("both maps are linear") {
  std::mt19937_64 rng(5);
  const EigenvalueSequence a(oracle::random_real_window(rng, 300));
  const EigenvalueSequence b(oracle::random_real_window(rng, 300));
  const Complex alpha(2.0, -1.0);
  const Complex beta(-0.5, 0.0);
  const auto combo = EigenvalueSequence::generate(300, [&](std::size_t n) { return alpha * a[n] + beta * b[n]; });
  const GammaSequence ga = gamma_of_lambda(a);
  const GammaSequence gb = gamma_of_lambda(b);
  const GammaSequence gc = gamma_of_lambda(combo);
  for (std::size_t n = 0; n < gc.size(); ++n) {
    CHECK(std::abs(gc[n] - (alpha * ga[n] + beta * gb[n])) <= 1e-9 * (1.0 + std::abs(gc[n])));
  }
  const auto gsum = GammaSequence::generate(gc.size(), [&](std::size_t n) { return alpha * ga[n] + beta * gb[n]; });
  const EigenvalueSequence back = lambda_of_gamma(gsum, combo[0]);
  for (std::size_t n = 0; n < back.size(); ++n) CHECK(std::abs(back[n] - combo[n]) <= 1e-9);
}

TEST_CASE("norm equivalence on decaying and log-oscillating families") {
  const NormEquivalenceReport h = norm_equivalence_check(harmonic(10000));
  CHECK(h.d2 == doctest::Approx(4.0 / 3.0));
  CHECK(h.gamma_sup == doctest::Approx(1.0));
  CHECK(h.lower == doctest::Approx(4.0 / 18.0));
  CHECK(h.upper == doctest::Approx(8.0));
  CHECK(h.status == EquivalenceStatus::kHolds);
  CHECK(h.telescoping_bound_holds);

  for (double beta : {1.0, 2.0}) {
    const auto lambda = EigenvalueSequence::generate(10000, [beta](std::size_t n) {
      return std::sin(beta * std::log(n + 1.0));
    });
    const NormEquivalenceReport r = norm_equivalence_check(lambda);
    CHECK(r.status == EquivalenceStatus::kHolds);
    CHECK(r.lower <= r.gamma_sup);
    CHECK(r.gamma_sup <= r.upper);
    CHECK(r.telescoping_bound_holds);
  }

  const NormEquivalenceReport flat =
      norm_equivalence_check(EigenvalueSequence::generate(100, [](std::size_t) { return Complex(1.0, 2.0); }));
  CHECK(flat.d2 == 0.0);
  CHECK(flat.gamma_sup == 0.0);
  CHECK(flat.status == EquivalenceStatus::kHolds);
}

TEST_CASE("growth at the window edge is inconclusive, not a violation") {
  // d2 vanishes while |gamma_n| = 2(n+1) peaks at the last index
  const NormEquivalenceReport r =
      norm_equivalence_check(EigenvalueSequence::generate(1000, [](std::size_t n) { return n + 1.0; }));
  CHECK(r.d2 == 0.0);
  CHECK(r.gamma_sup == doctest::Approx(2.0 * 999.0));
  CHECK(r.status == EquivalenceStatus::kWindowInconclusive);
  CHECK(to_string(r.status) == "window-inconclusive");
  CHECK(to_string(EquivalenceStatus::kHolds) == "holds");
  CHECK(to_string(EquivalenceStatus::kViolated) == "violated");

  const NormEquivalenceReport alt =
      norm_equivalence_check(EigenvalueSequence::generate(1000, [](std::size_t n) { return n % 2 ? -1.0 : 1.0; }));
  CHECK(alt.gamma_sup == doctest::Approx(4.0 * 999.0 * 999.0));
  CHECK(alt.d2 == doctest::Approx(4.0 * 999.0 * 999.0));
  CHECK(alt.status == EquivalenceStatus::kHolds);
  CHECK_THROWS_AS(norm_equivalence_check(harmonic(2)), WindowError);
}

TEST_CASE("telescoping bound holds on random windows") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const EigenvalueSequence lambda(oracle::random_real_window(rng, 500));
    CHECK(norm_equivalence_check(lambda).telescoping_bound_holds);
  }
}

TEST_CASE("gamma series value") {
  const GammaSequence h = gamma_of_lambda(harmonic(1000));
  for (double r : {0.0, 0.3, 0.6, 0.9}) {
    const double omx = 1.0 - r * r;
    CHECK(std::abs(laplacian_series_value(h, r) + omx * omx) <= 1e-12);
  }
  const GammaSequence zero(std::vector<Complex>(5, Complex(0.0)));
  CHECK(laplacian_series_value(zero, 0.5) == Complex(0.0));
}

TEST_CASE("gamma series value needs r inside the disk") {
  const GammaSequence h = gamma_of_lambda(harmonic(10));
  CHECK_THROWS_AS(laplacian_series_value(h, 1.0), RangeError);
  CHECK_THROWS_AS(laplacian_series_value(h, -0.1), RangeError);
}
