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

#include "radtoep/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <variant>

// Boost 1.74's pchip calls isnan unqualified; <math.h> provides ::isnan.
#include <math.h>

#include <boost/math/interpolators/pchip.hpp>

#include "radtoep/errors.hpp"

namespace radtoep {

namespace {

struct ConstantData {
  double c;
};
struct PowerData {
  double s;
};
struct PiecewiseData {
  std::vector<double> breakpoints;
  std::vector<double> values;
};
struct LogOscillationData {
  double beta;
};
struct TabulatedData {
  std::vector<double> t;
  std::vector<double> values;
  boost::math::interpolators::pchip<std::vector<double>> spline;
};

using SymbolData = std::variant<ConstantData, PowerData, PiecewiseData, LogOscillationData, TabulatedData>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

struct RadialSymbol::Impl {
  SymbolData data;
  double sup_bound = 0.0;
  std::vector<double> jumps;
};

RadialSymbol::RadialSymbol(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

RadialSymbol RadialSymbol::constant(double c) {
  require_finite(c, "constant symbol value");
  auto impl = std::make_shared<Impl>();
  impl->data = ConstantData{c};
  impl->sup_bound = std::abs(c);
  return RadialSymbol(std::move(impl));
}

RadialSymbol RadialSymbol::power(double s) {
  require_finite(s, "power exponent");
  if (s < 0.0) throw DomainError("power symbol r^{2s} needs s >= 0");
  auto impl = std::make_shared<Impl>();
  impl->data = PowerData{s};
  impl->sup_bound = 1.0;
  return RadialSymbol(std::move(impl));
}

RadialSymbol RadialSymbol::piecewise(std::vector<double> breakpoints, std::vector<double> values) {
  if (breakpoints.size() < 2 || values.size() + 1 != breakpoints.size()) {
    throw DomainError("piecewise symbol needs J+1 breakpoints for J values (J >= 1)");
  }
  if (breakpoints.front() != 0.0 || breakpoints.back() != 1.0) {
    throw DomainError("piecewise breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1])) {
      throw DomainError("piecewise breakpoints must be strictly increasing");
    }
  }
  for (double v : values) require_finite(v, "piecewise value");
  auto impl = std::make_shared<Impl>();
  impl->sup_bound = max_abs(values);
  impl->jumps.assign(breakpoints.begin() + 1, breakpoints.end() - 1);
  impl->data = PiecewiseData{std::move(breakpoints), std::move(values)};
  return RadialSymbol(std::move(impl));
}

RadialSymbol RadialSymbol::indicator(double a) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("indicator threshold must lie in (0, 1)");
  return piecewise({0.0, a, 1.0}, {0.0, 1.0});
}

RadialSymbol RadialSymbol::log_oscillation(double beta) {
  require_finite(beta, "oscillation frequency");
  auto impl = std::make_shared<Impl>();
  impl->data = LogOscillationData{beta};
  impl->sup_bound = 1.0;
  return RadialSymbol(std::move(impl));
}

RadialSymbol RadialSymbol::tabulated(std::vector<double> t, std::vector<double> values) {
  if (t.size() < 4 || t.size() != values.size()) {
    throw DomainError("tabulated symbol needs at least 4 samples and matching value count");
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    require_finite(t[i], "tabulated node");
    require_finite(values[i], "tabulated value");
    if (i > 0 && !(t[i - 1] < t[i])) throw DomainError("tabulated nodes must be strictly increasing");
  }
  if (t.front() < 0.0 || t.back() > 1.0) throw DomainError("tabulated nodes must lie in [0, 1]");
  auto impl = std::make_shared<Impl>();
  impl->sup_bound = max_abs(values);
  std::vector<double> xs = t;
  std::vector<double> ys = values;
  impl->data = TabulatedData{std::move(t), std::move(values),
                             boost::math::interpolators::pchip<std::vector<double>>(std::move(xs), std::move(ys))};
  return RadialSymbol(std::move(impl));
}

RadialSymbol RadialSymbol::with_sup_bound(double bound) const {
  if (!(bound >= 0.0) || !std::isfinite(bound)) throw DomainError("sup_bound must be finite and >= 0");
  auto impl = std::make_shared<Impl>(*impl_);
  impl->sup_bound = bound;
  RadialSymbol out(std::move(impl));
  out.spot_check();
  return out;
}

void RadialSymbol::spot_check() const {
  static constexpr double kSampleRadii[] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7,
                                            0.8, 0.9, 0.95, 0.99, 0.999, 0.9999};
  for (double r : kSampleRadii) {
    const double v = (*this)(r);
    if (std::abs(v) > sup_bound() * (1.0 + 1e-12)) {
      std::ostringstream msg;
      msg << "declared sup_bound " << sup_bound() << " is violated at r=" << r << " where |b|=" << std::abs(v);
      throw DomainError(msg.str());
    }
  }
}

RadialSymbol::Kind RadialSymbol::kind() const noexcept {
  return static_cast<Kind>(impl_->data.index());
}

std::string_view RadialSymbol::kind_name() const noexcept {
  switch (kind()) {
    case Kind::kConstant: return "constant";
    case Kind::kPower: return "power";
    case Kind::kPiecewise: return "piecewise";
    case Kind::kLogOscillation: return "log_oscillation";
    case Kind::kTabulated: return "tabulated";
  }
  return "unknown";
}

double RadialSymbol::operator()(double r) const {
  const double t = r * r;
  return at_t(t, (1.0 - r) * (1.0 + r));
}

double RadialSymbol::at_t(double t, double one_minus_t) const {
  return std::visit(
      overloaded{
          [](const ConstantData& d) { return d.c; },
          [t](const PowerData& d) { return d.s == 0.0 ? 1.0 : std::pow(t, d.s); },
          [t](const PiecewiseData& d) {
            auto it = std::upper_bound(d.breakpoints.begin(), d.breakpoints.end(), t);
            std::size_t j = it == d.breakpoints.begin() ? 0 : static_cast<std::size_t>(it - d.breakpoints.begin()) - 1;
            j = std::min(j, d.values.size() - 1);
            return d.values[j];
          },
          [one_minus_t](const LogOscillationData& d) {
            if (!(one_minus_t > 0.0)) return 0.0;
            return std::sin(-d.beta * std::log(one_minus_t));
          },
          [t](const TabulatedData& d) {
            const double x = std::clamp(t, d.t.front(), d.t.back());
            return d.spline(x);
          },
      },
      impl_->data);
}

double RadialSymbol::sup_bound() const noexcept { return impl_->sup_bound; }

const std::vector<double>& RadialSymbol::breakpoints_t() const noexcept { return impl_->jumps; }

bool RadialSymbol::oscillates_at_boundary() const noexcept { return kind() == Kind::kLogOscillation; }

namespace {

template <class T>
const T& expect_kind(const SymbolData& data, const char* name) {
  if (const T* p = std::get_if<T>(&data)) return *p;
  throw DomainError(std::string("symbol is not of kind ") + name);
}

}  // namespace

double RadialSymbol::constant_value() const { return expect_kind<ConstantData>(impl_->data, "constant").c; }
double RadialSymbol::power_exponent() const { return expect_kind<PowerData>(impl_->data, "power").s; }
double RadialSymbol::oscillation_beta() const {
  return expect_kind<LogOscillationData>(impl_->data, "log_oscillation").beta;
}
const std::vector<double>& RadialSymbol::piecewise_breakpoints() const {
  return expect_kind<PiecewiseData>(impl_->data, "piecewise").breakpoints;
}
const std::vector<double>& RadialSymbol::piecewise_values() const {
  return expect_kind<PiecewiseData>(impl_->data, "piecewise").values;
}
const std::vector<double>& RadialSymbol::tabulated_t() const {
  return expect_kind<TabulatedData>(impl_->data, "tabulated").t;
}
const std::vector<double>& RadialSymbol::tabulated_values() const {
  return expect_kind<TabulatedData>(impl_->data, "tabulated").values;
}

std::optional<double> RadialSymbol::exact_eigenvalue(std::size_t n) const {
  if (const auto* c = std::get_if<ConstantData>(&impl_->data)) return c->c;
  if (const auto* p = std::get_if<PiecewiseData>(&impl_->data)) {
    // sum_j c_j (t_{j+1}^{n+1} - t_j^{n+1})
    const double e = static_cast<double>(n) + 1.0;
    double sum = 0.0;
    for (std::size_t j = 0; j < p->values.size(); ++j) {
      sum += p->values[j] * (std::pow(p->breakpoints[j + 1], e) - std::pow(p->breakpoints[j], e));
    }
    return sum;
  }
  return std::nullopt;
}

std::optional<double> RadialSymbol::exact_tail_integral(double t) const {
  if (const auto* c = std::get_if<ConstantData>(&impl_->data)) return c->c * (1.0 - t);
  if (const auto* p = std::get_if<PiecewiseData>(&impl_->data)) {
    double sum = 0.0;
    for (std::size_t j = 0; j < p->values.size(); ++j) {
      const double lo = std::max(p->breakpoints[j], t);
      const double hi = p->breakpoints[j + 1];
      if (hi > lo) sum += p->values[j] * (hi - lo);
    }
    return sum;
  }
  return std::nullopt;
}

}  // namespace radtoep
