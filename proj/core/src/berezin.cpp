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

#include "radtoep/berezin.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "radtoep/errors.hpp"
#include "radtoep/laplacian.hpp"
#include "radtoep/parallel.hpp"
#include "radtoep/sequences.hpp"

namespace radtoep {

namespace {

using LComplex = std::complex<long double>;

constexpr std::size_t kMaxSeriesOrder = 2'000'000;

void require_order(int k) {
  if (k < 0) throw DomainError("Berezin order k must be >= 0");
}

struct SeriesValues {
  LComplex f;
  LComplex df;
  LComplex d2f;
};

SeriesValues evaluate_series(const BerezinProfile& profile, double r) {
  if (!(r >= 0.0 && r <= kBerezinRMax)) {
    std::ostringstream msg;
    msg << "Berezin profile evaluated at r=" << r << " outside [0, " << kBerezinRMax << "]";
    throw RangeError(msg.str());
  }
  const long double x = static_cast<long double>(r) * r;
  const long double omx = (1.0L - r) * (1.0L + r);
  LComplex p0 = 0.0L;
  LComplex p1 = 0.0L;
  LComplex p2 = 0.0L;
  for (auto it = profile.coefficients.rbegin(); it != profile.coefficients.rend(); ++it) {
    p2 = p2 * x + p1;
    p1 = p1 * x + p0;
    p0 = p0 * x + *it;
  }
  const LComplex s = p0;
  const LComplex ds = p1;
  const LComplex d2s = 2.0L * p2;

  const long double k = profile.k;
  const long double g = (k + 1) * std::pow(omx, k + 2);
  const long double dg = -(k + 1) * (k + 2) * std::pow(omx, k + 1);
  const long double d2g = (k + 1) * (k + 2) * (k + 1) * std::pow(omx, k);
  return {g * s, dg * s + g * ds, d2g * s + 2.0L * dg * ds + g * d2s};
}

Complex narrow(const LComplex& z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

}  // namespace

Complex BerezinProfile::operator()(double r) const { return narrow(evaluate_series(*this, r).f); }

Complex BerezinProfile::d_dx(double r) const { return narrow(evaluate_series(*this, r).df); }

Complex BerezinProfile::d2_dx2(double r) const { return narrow(evaluate_series(*this, r).d2f); }

Complex BerezinProfile::invariant_laplacian(double r) const {
  const SeriesValues v = evaluate_series(*this, r);
  const long double x = static_cast<long double>(r) * r;
  const long double omx = (1.0L - r) * (1.0L + r);
  return narrow(omx * omx * (x * v.d2f + v.df));
}

BerezinProfile berezin_of_radial_operator(const EigenvalueSequence& lambda, int k, double tol, bool strict) {
  require_order(k);
  if (!(tol > 0.0)) throw DomainError("series truncation tolerance must be positive");

  const double sup = sup_norm(lambda).value;
  const long double x = static_cast<long double>(kBerezinRMax) * kBerezinRMax;
  const long double omx = (1.0L - kBerezinRMax) * (1.0L + kBerezinRMax);
  const long double kk = k;

  // Bound on the p-th term at r_max: |a_p| <= C(p+k+1,k+1)^2 2^k sup / (p+1).
  // Successive bounds have ratio rho_p, decreasing in p.
  auto ratio = [&](std::size_t p) {
    const long double q = static_cast<long double>(p);
    const long double grow = (q + kk + 2) / (q + 1);
    return x * grow * grow * (q + 1) / (q + 2);
  };
  long double term = (kk + 1) * std::pow(omx, kk + 2) * std::ldexp(1.0L, k) * sup;
  std::size_t order = 1;
  long double tail = 0.0L;
  for (;; ++order) {
    // term currently bounds the (order-1)-th term; step to the first dropped one.
    term *= ratio(order - 1);
    const long double rho = ratio(order);
    if (rho < 1.0L) {
      tail = term / (1.0L - rho);
      if (tail <= tol) break;
    }
    if (order >= kMaxSeriesOrder) {
      throw ToleranceError("Berezin series did not reach the truncation tolerance", 0.0,
                           static_cast<double>(tail));
    }
  }

  const std::size_t window = lambda.size();
  const bool extended = order - 1 + static_cast<std::size_t>(k) >= window;
  if (extended && strict) {
    std::ostringstream msg;
    msg << "Berezin series of order " << order << " at k=" << k << " needs " << order + static_cast<std::size_t>(k)
        << " eigenvalues but the window holds " << window;
    throw WindowError(msg.str());
  }

  auto nu = [&](std::size_t q) {
    const Complex v = q < window ? lambda[q] : lambda.back();
    return LComplex(v.real(), v.imag()) / static_cast<long double>(q + 1);
  };
  std::vector<long double> signed_binomial(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) signed_binomial[static_cast<std::size_t>(j)] = (j % 2 ? -1.0L : 1.0L) * binomial(k, j);

  BerezinProfile profile;
  profile.k = k;
  profile.truncation_tol = tol;
  profile.tail_bound = static_cast<double>(tail);
  profile.window = window;
  profile.window_extended = extended;
  profile.coefficients.resize(order);
  long double c = 1.0L;  // C(p+k+1, k+1)
  for (std::size_t p = 0; p < order; ++p) {
    if (p > 0) c *= (static_cast<long double>(p) + kk + 1) / static_cast<long double>(p);
    LComplex diff = 0.0L;
    for (int j = 0; j <= k; ++j) diff += signed_binomial[static_cast<std::size_t>(j)] * nu(p + static_cast<std::size_t>(j));
    profile.coefficients[p] = c * c * diff;
  }
  return profile;
}

namespace {

// P_s(y) = sum_{i=0}^{s} C(s,i)^2 y^i
double squared_binomial_poly(int s, double y) {
  double acc = 0.0;
  for (int i = s; i >= 0; --i) {
    const double c = binomial(s, i);
    acc = acc * y + c * c;
  }
  return acc;
}

// Mean over theta of |1 - rho e^{i theta}|^{-2s}, rho = sqrt(y).
double trapezoid_angular_mean(int s, double y, double one_minus_y) {
  const double rho = std::sqrt(y);
  const double one_minus_rho = one_minus_y / (1.0 + rho);
  auto g = [&](double theta) {
    const double sh = std::sin(0.5 * theta);
    const double mod2 = one_minus_rho * one_minus_rho + 4.0 * rho * sh * sh;
    return std::pow(mod2, -s);
  };
  std::size_t n = 8;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += g(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
  double mean = sum / static_cast<double>(n);
  constexpr std::size_t kMaxPoints = std::size_t{1} << 22;
  while (n < kMaxPoints) {
    for (std::size_t i = 0; i < n; ++i) {
      sum += g(2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(n));
    }
    n *= 2;
    const double next = sum / static_cast<double>(n);
    const bool settled = std::abs(next - mean) <= 1e-14 * std::abs(next);
    mean = next;
    if (settled && n >= 16) return mean;
  }
  throw ToleranceError("angular trapezoid rule did not settle", mean, 0.0);
}

}  // namespace

double berezin_of_radial_symbol_at_x(const RadialSymbol& b, int k, double x, double one_minus_x,
                                     const QuadratureConfig& config, AngularRule rule) {
  require_order(k);
  if (!(x >= 0.0 && one_minus_x > 0.0)) throw RangeError("Berezin symbol transform needs x in [0, 1)");
  const double kk = k;
  const double omx = one_minus_x;

  // Integrate over v = 1 - t so that the peak of the weight near t = x,
  // whose width is of order 1 - x, stays resolvable as x -> 1.
  auto integrand = [&](double v) {
    const double t = 1.0 - v;
    const double omxt = omx + x * v;  // 1 - xt without cancellation
    const double value = b.at_t(t, v);
    if (value == 0.0) return 0.0;
    if (rule == AngularRule::kClosedForm) {
      const double rho = omx * v / (omxt * omxt);
      return (kk + 1) * value * std::pow(rho, kk) * omx * omx / (omxt * omxt * omxt) *
             squared_binomial_poly(k + 1, x * t);
    }
    return (kk + 1) * value * std::pow(omx * v, kk) * omx * omx * trapezoid_angular_mean(k + 2, x * t, omxt);
  };

  std::vector<double> cuts;
  for (double jump : b.breakpoints_t()) cuts.push_back(1.0 - jump);
  cuts.push_back(omx);
  for (double w = omx; w < 1.0; w *= 2.0) {
    cuts.push_back(omx - w);
    cuts.push_back(omx + w);
  }
  if (b.oscillates_at_boundary()) {
    const auto extra = geometric_cuts(1.0, 0.0, kBoundaryCutLevels);
    cuts.insert(cuts.end(), extra.begin(), extra.end());
  }
  return integrate(integrand, 0.0, 1.0, config, cuts).value;
}

double berezin_of_radial_symbol(const RadialSymbol& b, int k, double r, const QuadratureConfig& config,
                                AngularRule rule) {
  if (!(r >= 0.0 && r <= kBerezinRMax)) {
    std::ostringstream msg;
    msg << "Berezin symbol transform evaluated at r=" << r << " outside [0, " << kBerezinRMax << "]";
    throw RangeError(msg.str());
  }
  return berezin_of_radial_symbol_at_x(b, k, r * r, (1.0 - r) * (1.0 + r), config, rule);
}

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// W_{m,n} as an exact rational. The alternating sum is rewritten as
// T_0 (1 + r_1 (1 + r_2 (...))), where r_j is the ratio of the j-th term to
// the (j-1)-th, and T_0 = (k+1)(m+1)/(n+1) C(n+k+1,k+1)^2 (k+2)! / prod_{i=1}^{k+3} (n+m+i).
cpp_rational exact_weight(int k, std::size_t m, std::size_t n) {
  const std::size_t kk = static_cast<std::size_t>(k);
  cpp_int binom = 1;  // C(n+k+1, k+1)
  for (std::size_t i = 1; i <= kk + 1; ++i) binom = binom * (n + i) / i;
  cpp_int falling = 1;
  for (std::size_t i = 1; i <= kk + 3; ++i) falling *= n + m + i;
  cpp_int factorial = 1;
  for (std::size_t i = 2; i <= kk + 2; ++i) factorial *= i;
  const cpp_rational t0(cpp_int(kk + 1) * (m + 1) * binom * binom * factorial, cpp_int(n + 1) * falling);

  cpp_int num = 1;
  cpp_int den = 1;
  for (std::size_t j = std::min(kk, n); j >= 1; --j) {
    const std::size_t q = n - j;
    const cpp_int rn = cpp_int(kk - j + 1) * (q + 1) * (q + 1) * (q + m + kk + 4);
    const cpp_int rd = cpp_int(j) * (q + kk + 2) * (q + kk + 2) * (q + m + 1);
    num = rd * den - rn * num;
    den = rd * den;
  }
  return t0 * cpp_rational(num, den);
}

// For s = m+n >= k the weight has the cancellation-free form
//
//   W_{m,n} = (m+1)(n+1) sum_{i,j<=k} a_{ij} (m)_i (n)_j / (s-k+1)_{2k+3}
//
// with falling factorials (m)_i, a rising factorial in the denominator and
// a_{ij} >= 0. The a_{ij} are Newton coefficients of the polynomial
// P(m,n) = W (s-k+1)_{2k+3} / ((m+1)(n+1)), found exactly from P on the
// grid 0..k x 0..k.
struct WeightPolynomial {
  int k = 0;
  std::vector<long double> a;  // a[i * (k+1) + j]
};

WeightPolynomial build_weight_polynomial(int k) {
  const std::size_t size = static_cast<std::size_t>(k) + 1;
  std::vector<cpp_rational> table(size * size);
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t q = 0; q < size; ++q) {
      const long long s = static_cast<long long>(p + q);
      cpp_int rising = 1;
      for (long long t = 0; t < 2 * k + 3; ++t) rising *= cpp_int(s - k + 1 + t);
      table[p * size + q] = rising == 0 ? cpp_rational(0)
                                        : exact_weight(k, p, q) * cpp_rational(rising, cpp_int((p + 1) * (q + 1)));
    }
  }
  // Forward-difference tables along each axis turn values into Newton
  // coefficients: a_{ij} i! j! = Delta_m^i Delta_n^j P(0, 0).
  for (std::size_t q = 0; q < size; ++q) {
    for (std::size_t order = 1; order < size; ++order) {
      for (std::size_t p = size - 1; p >= order; --p) table[p * size + q] -= table[(p - 1) * size + q];
    }
  }
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t order = 1; order < size; ++order) {
      for (std::size_t q = size - 1; q >= order; --q) table[p * size + q] -= table[p * size + q - 1];
    }
  }
  WeightPolynomial poly;
  poly.k = k;
  poly.a.resize(size * size);
  cpp_int fi = 1;
  for (std::size_t i = 0; i < size; ++i) {
    if (i > 0) fi *= i;
    cpp_int fj = 1;
    for (std::size_t j = 0; j < size; ++j) {
      if (j > 0) fj *= j;
      const cpp_rational c = table[i * size + j] / cpp_rational(fi * fj);
      if (c < 0) throw InvariantError("negative Newton coefficient in the iterate weight polynomial");
      poly.a[i * size + j] = c.convert_to<long double>();
    }
  }
  return poly;
}

const WeightPolynomial& weight_polynomial(int k) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<WeightPolynomial>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) {
    it = cache.emplace(k, std::make_unique<WeightPolynomial>(build_weight_polynomial(k))).first;
  }
  return *it->second;
}

// Row m of W for n < count, all terms non-negative.
void weight_row(int k, std::size_t m, std::size_t count, std::vector<long double>& row) {
  const WeightPolynomial& poly = weight_polynomial(k);
  const std::size_t size = static_cast<std::size_t>(k) + 1;
  const long double lm = static_cast<long double>(m);
  // A_j = sum_i a_{ij} (m)_i, nested so (m)_i never forms explicitly.
  std::vector<long double> A(size);
  for (std::size_t j = 0; j < size; ++j) {
    long double acc = 0.0L;
    for (std::size_t i = size; i-- > 0;) acc = acc * (lm - static_cast<long double>(i)) + poly.a[i * size + j];
    A[j] = acc;
  }
  row.assign(count, 0.0L);
  for (std::size_t n = 0; n < count; ++n) {
    if (n + m < static_cast<std::size_t>(k)) {
      row[n] = exact_weight(k, m, n).convert_to<long double>();
      continue;
    }
    const long double ln = static_cast<long double>(n);
    long double num = 0.0L;
    for (std::size_t j = size; j-- > 0;) num = num * (ln - static_cast<long double>(j)) + A[j];
    const long double s = lm + ln;
    long double den = 1.0L;
    for (int t = 0; t < 2 * k + 3; ++t) den *= s - k + 1 + t;
    row[n] = (lm + 1) * (ln + 1) * num / den;
  }
}

}  // namespace

double berezin_weight(int k, std::size_t m, std::size_t n) {
  require_order(k);
  return exact_weight(k, m, n).convert_to<double>();
}

BerezinIterate berezin_iterate_eigenvalues(const EigenvalueSequence& lambda, int k, std::size_t count, double tol,
                                           bool strict) {
  require_order(k);
  if (count == 0) throw WindowError("iterate window must hold at least one value");
  const std::size_t window = lambda.size();
  weight_polynomial(k);  // build once before the parallel rows
  std::vector<Complex> out(count);
  std::vector<double> tails(count);
  parallel_for(count, [&](std::size_t m) {
    std::vector<long double> row;
    weight_row(k, m, window, row);
    LComplex acc = 0.0L;
    long double used = 0.0L;
    for (std::size_t n = 0; n < window; ++n) {
      acc += row[n] * LComplex(lambda[n].real(), lambda[n].imag());
      used += row[n];
    }
    const long double tail = std::max(0.0L, 1.0L - used);
    acc += tail * LComplex(lambda.back().real(), lambda.back().imag());
    out[m] = narrow(acc);
    tails[m] = static_cast<double>(tail);
  });
  BerezinIterate result{EigenvalueSequence(std::move(out)), *std::max_element(tails.begin(), tails.end()), false};
  const double sup = sup_norm(lambda).value;
  result.window_extended = result.tail_weight * sup > tol;
  if (strict && result.window_extended) {
    std::ostringstream msg;
    msg << "Berezin iterate at k=" << k << " places weight " << result.tail_weight
        << " past the eigenvalue window of length " << window;
    throw WindowError(msg.str());
  }
  return result;
}

ConvergenceReport convergence_report(const EigenvalueSequence& lambda, int k_max, std::size_t count, double tol,
                                     bool strict) {
  if (k_max < 1) throw DomainError("convergence sweep needs k_max >= 1");
  if (count < 2) throw WindowError("convergence sweep needs a window of at least 2");

  ConvergenceReport report;
  report.window = count;
  std::vector<Complex> reference(count);
  for (std::size_t m = 0; m < count; ++m) reference[m] = m < lambda.size() ? lambda[m] : lambda.back();
  const EigenvalueSequence base(reference);
  report.input_sup_norm = sup_norm(base).value;

  double excess = -report.input_sup_norm;
  for (int k = 0; k <= k_max; ++k) {
    const BerezinIterate it = berezin_iterate_eigenvalues(lambda, k, count, tol, strict);
    ConvergenceRow row;
    row.k = k;
    row.tail_weight = it.tail_weight;
    for (std::size_t m = 0; m < count; ++m) row.deviation = std::max(row.deviation, std::abs(it.values[m] - reference[m]));
    row.sup_norm = sup_norm(it.values).value;
    for (const Complex& g : gamma_of_lambda(it.values)) row.gamma_sup = std::max(row.gamma_sup, std::abs(g));
    excess = std::max(excess, row.sup_norm - report.input_sup_norm);
    if (!report.rows.empty() && row.deviation > report.rows.back().deviation) report.deviation_nonincreasing = false;
    report.rows.push_back(row);
  }
  report.contraction_excess = excess;
  const double initial = report.rows.front().deviation;
  report.final_over_initial = initial > 0.0 ? report.rows.back().deviation / initial : 0.0;
  return report;
}

LaplacianIdentityReport laplacian_identity_check(const EigenvalueSequence& lambda, int k,
                                                 std::span<const double> radii, double tol, bool strict) {
  const BerezinProfile lower = berezin_of_radial_operator(lambda, k, tol, strict);
  const BerezinProfile upper = berezin_of_radial_operator(lambda, k + 1, tol, strict);
  const double scale = (k + 1.0) * (k + 2.0);

  LaplacianIdentityReport report;
  report.k = k;
  for (double r : radii) {
    LaplacianResidual row;
    row.r = r;
    row.lhs = lower.invariant_laplacian(r);
    row.rhs = scale * (lower(r) - upper(r));
    row.residual = std::abs(row.lhs - row.rhs);
    report.max_residual = std::max(report.max_residual, row.residual);
    report.rows.push_back(row);
  }
  return report;
}

RadialSymbol tabulate_berezin(const RadialSymbol& b, int j, const QuadratureConfig& config) {
  require_order(j);
  // Uniform on [0, 0.9], then geometric toward 1 down to 1 - t = 1e-6.
  std::vector<double> t;
  std::vector<double> one_minus_t;
  for (int i = 0; i <= 45; ++i) {
    t.push_back(i / 50.0);
    one_minus_t.push_back(1.0 - i / 50.0);
  }
  for (int i = 1; i <= 40; ++i) {
    const double gap = 0.1 * std::pow(10.0, -i / 8.0);
    t.push_back(1.0 - gap);
    one_minus_t.push_back(gap);
  }
  std::vector<double> values(t.size());
  parallel_for(t.size(), [&](std::size_t i) {
    values[i] = berezin_of_radial_symbol_at_x(b, j, t[i], one_minus_t[i], config);
  });
  return RadialSymbol::tabulated(std::move(t), std::move(values));
}

CommutativityReport commutativity_check(const RadialSymbol& b, int j, int k, std::span<const double> radii,
                                        const QuadratureConfig& config) {
  const RadialSymbol inner_j = tabulate_berezin(b, j, config);
  const RadialSymbol inner_k = tabulate_berezin(b, k, config);

  CommutativityReport report;
  report.j = j;
  report.k = k;
  report.rows.resize(radii.size());
  parallel_for(radii.size(), [&](std::size_t i) {
    CommutativityRow& row = report.rows[i];
    row.r = radii[i];
    row.kj = berezin_of_radial_symbol(inner_j, k, row.r, config);
    row.jk = berezin_of_radial_symbol(inner_k, j, row.r, config);
    row.residual = std::abs(row.kj - row.jk);
  });
  for (const auto& row : report.rows) report.max_residual = std::max(report.max_residual, row.residual);
  return report;
}

}  // namespace radtoep
