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
#include "radtoep/sequences.hpp"

using namespace radtoep;

namespace {

EigenvalueSequence real_seq(std::initializer_list<double> v) {
  return EigenvalueSequence::from_real(std::vector<double>(v));
}

}  // namespace

TEST_CASE("differences of a constant vanish") {
  const auto x = EigenvalueSequence::generate(20, [](std::size_t) { return Complex(2.5, -1.0); });
  for (int m = 1; m <= 10; ++m) {
    for (std::size_t n = 0; n + m < 20; ++n) CHECK(std::abs(difference(x, m, n)) == doctest::Approx(0.0));
  }
}

TEST_CASE("differences of squares match the signed binomial sum") {
  const auto x = real_seq({0, 1, 4, 9});
  CHECK(difference(x, 2, 0).real() == 2.0);
  CHECK(difference(x, 3, 0).real() == 0.0);
  CHECK(difference(x, 1, 2).real() == 5.0);
  CHECK(difference(x, 0, 3).real() == 9.0);
}

TEST_CASE("difference outside the window is a range error") {
  const auto x = real_seq({0, 1, 4, 9});
  CHECK_THROWS_AS(difference(x, 2, 2), RangeError);
  CHECK_THROWS_AS(difference(x, 4, 0), RangeError);
  CHECK_THROWS_AS(difference(x, -1, 0), RangeError);
}

TEST_CASE("differences follow the Pascal recurrence") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = oracle::random_real_window(rng, 30);
    const EigenvalueSequence x(v);
    for (int m = 0; m <= 3; ++m) {
      for (std::size_t n = 0; n + m + 2 <= 30; ++n) {
        const Complex lhs = difference(x, m + 1, n);
        const Complex rhs = difference(x, m, n + 1) - difference(x, m, n);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
      }
    }
  }
}

TEST_CASE("high-order differences agree with the exact binomial oracle") {
  std::mt19937_64 rng(5);
  const auto v = oracle::random_real_window(rng, 40);
  const EigenvalueSequence x(v);
  for (int m : {0, 1, 5, 8, 9, 12, 20}) {
    for (std::size_t n : {0u, 3u, 10u}) {
      if (n + m >= 40) continue;
      const Complex expect = oracle::direct_difference(v, m, n);
      const double scale = oracle::exact_binomial(m, m / 2).convert_to<double>();
      CHECK(std::abs(difference(x, m, n) - expect) <= 1e-12 * scale * 4);
    }
  }
}

TEST_CASE("binomial coefficients are exact through n = 64 and accurate beyond") {
  for (int n = 0; n <= 64; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::exact_binomial(n, k).convert_to<double>());
  }
  for (int n : {65, 80, 100, 200}) {
    for (int k : {1, 7, n / 3, n / 2}) {
      const double expect = oracle::exact_binomial(n, k).convert_to<double>();
      CHECK(binomial(n, k) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
  CHECK(binomial(5, 7) == 0.0);
}

TEST_CASE("d1 seminorm on reference sequences") {
  CHECK(d1_seminorm(EigenvalueSequence::generate(10, [](std::size_t) { return 3.0; })).value == 0.0);

  const auto harmonic = EigenvalueSequence::generate(100, [](std::size_t n) { return 1.0 / (n + 1.0); });
  const WindowMax h = d1_seminorm(harmonic);
  CHECK(h.value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(h.argmax == 0);

  const auto alternating = EigenvalueSequence::generate(100, [](std::size_t n) { return n % 2 ? -1.0 : 1.0; });
  const WindowMax a = d1_seminorm(alternating);
  CHECK(a.value == 198.0);
  CHECK(a.argmax == 98);

  CHECK_THROWS_AS(d1_seminorm(real_seq({1.0})), WindowError);
}

TEST_CASE("d2 seminorm uses the (n+2)^2 weight") {
  const auto affine = EigenvalueSequence::generate(50, [](std::size_t n) { return 2.0 - 0.5 * n; });
  CHECK(d2_seminorm(affine).value == 0.0);

  const auto harmonic = EigenvalueSequence::generate(100, [](std::size_t n) { return 1.0 / (n + 1.0); });
  const WindowMax h = d2_seminorm(harmonic);
  CHECK(h.value == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  CHECK(h.argmax == 0);

  const auto alternating = EigenvalueSequence::generate(10, [](std::size_t n) { return n % 2 ? -1.0 : 1.0; });
  const WindowMax a = d2_seminorm(alternating);
  CHECK(a.value == 324.0);
  CHECK(a.argmax == 7);

  CHECK_THROWS_AS(d2_seminorm(real_seq({1.0, 2.0})), WindowError);
}

TEST_CASE("seminorms use the complex modulus") {
  const auto x = EigenvalueSequence::generate(5, [](std::size_t n) { return Complex(0.0, n % 2 ? 1.0 : 0.0); });
  CHECK(sup_norm(x).value == 1.0);
  CHECK(d1_seminorm(x).value == 4.0);
}

TEST_CASE("seminorms never shrink as the window grows") {
  std::mt19937_64 rng(21);
  const auto v = oracle::random_real_window(rng, 200);
  double last_d1 = 0.0;
  double last_d2 = 0.0;
  for (std::size_t len = 3; len <= 200; len += 7) {
    const EigenvalueSequence x(std::vector<Complex>(v.begin(), v.begin() + static_cast<long>(len)));
    const double d1 = d1_seminorm(x).value;
    const double d2 = d2_seminorm(x).value;
    CHECK(d1 >= last_d1);
    CHECK(d2 >= last_d2);
    last_d1 = d1;
    last_d2 = d2;
  }
}

TEST_CASE("d1 is dominated by d2 up to a tail term on decaying families") {
  const std::size_t N = 10000;
  std::vector<EigenvalueSequence> family;
  family.push_back(EigenvalueSequence::generate(N, [](std::size_t n) { return 1.0 / (n + 1.0); }));
  for (double beta : {1.0, 2.0}) {
    family.push_back(EigenvalueSequence::generate(N, [beta](std::size_t n) { return std::sin(beta * std::log(n + 1.0)); }));
  }
  for (const auto& x : family) {
    const double d1 = d1_seminorm(x).value;
    const double d2 = d2_seminorm(x).value;
    CHECK(d1 <= d2 + d2 / static_cast<double>(N));
  }
}

TEST_CASE("Hausdorff cells reduce to simple identities for m = 0 and m = 1") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto v = oracle::random_real_window(rng, 40);
    const EigenvalueSequence x(v);
    for (int k = 0; k < 40; ++k) {
      CHECK(hausdorff_value(x, 0, k) == doctest::Approx(std::abs(v[k])).epsilon(1e-13));
      if (k >= 1) {
        const double expect = std::abs(static_cast<double>(k) * (v[k] - v[k - 1]) - v[k - 1]);
        CHECK(std::abs(hausdorff_value(x, 1, k) - expect) <= 1e-12);
      }
    }
  }
}

TEST_CASE("Hausdorff grid matches the brute-force oracle") {
  std::mt19937_64 rng(8);
  const auto v = oracle::random_real_window(rng, 25);
  const EigenvalueSequence x(v);
  const HausdorffGrid grid = hausdorff_grid(x, 6, 24);
  double max_seen = 0.0;
  for (int m = 0; m <= 6; ++m) {
    for (int k = m; k <= 24; ++k) {
      const double expect = oracle::direct_hausdorff(v, m, k);
      CHECK(grid.at(m, k) == doctest::Approx(expect).epsilon(1e-10).scale(1.0));
      max_seen = std::max(max_seen, grid.at(m, k));
    }
    CHECK(grid.row_max[m] == *std::max_element(grid.rows[m].begin(), grid.rows[m].end()));
  }
  CHECK(grid.max == max_seen);
}

TEST_CASE("Hausdorff grid of a sequence with constant moments") {
  // lambda_n = n+1 gives mu identically 1.
  const auto x = EigenvalueSequence::generate(30, [](std::size_t n) { return n + 1.0; });
  const HausdorffGrid grid = hausdorff_grid(x, 4, 29);
  for (int m = 1; m <= 4; ++m) CHECK(grid.row_max[m] == doctest::Approx(0.0));
  CHECK(hausdorff_value(x, 2, 5) == doctest::Approx(0.0));

  const auto ones = EigenvalueSequence::generate(12, [](std::size_t) { return 1.0; });
  const HausdorffGrid g1 = hausdorff_grid(ones, 0, 11);
  for (double v : g1.rows[0]) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("Hausdorff arguments are range checked") {
  const auto x = EigenvalueSequence::generate(5, [](std::size_t n) { return n * 1.0; });
  CHECK_THROWS_AS(hausdorff_value(x, 3, 2), RangeError);
  CHECK_THROWS_AS(hausdorff_value(x, 0, 5), RangeError);
  CHECK_THROWS_AS(hausdorff_grid(x, 3, 2), RangeError);
  CHECK_THROWS_AS(hausdorff_grid(x, 1, 5), RangeError);
}

TEST_CASE("seminorm report collects all window suprema") {
  const auto x = EigenvalueSequence::generate(100, [](std::size_t n) { return 1.0 / (n + 1.0); });
  const SeminormReport r = seminorm_report(x, 2, 50);
  CHECK(r.window == 100);
  CHECK(r.sup_norm == 1.0);
  CHECK(r.d1 == doctest::Approx(0.5));
  CHECK(r.d2 == doctest::Approx(4.0 / 3.0));
  REQUIRE(r.hausdorff_max.has_value());
  CHECK(*r.hausdorff_max == hausdorff_grid(x, 2, 50).max);
  CHECK_FALSE(seminorm_report(x).hausdorff_max.has_value());
}

TEST_CASE("sequences reject empty and non-finite windows") {
  CHECK_THROWS_AS(EigenvalueSequence(std::vector<Complex>{}), WindowError);
  CHECK_THROWS_AS(real_seq({1.0, std::nan("")}), DomainError);
}
