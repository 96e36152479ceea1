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

#ifndef RADTOEP_SEQUENCE_HPP
#define RADTOEP_SEQUENCE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radtoep/errors.hpp"

namespace radtoep {

using Complex = std::complex<double>;

/// A finite window x_0, ..., x_{N-1} of a complex sequence indexed from 0.
///
/// The tag parameter only exists to keep eigenvalue windows and the
/// Laplacian image (gamma) windows from being mixed up by accident; both
/// share the same storage and invariants: N >= 1 and every entry finite.
template <class Tag>
class BasicSequence {
 public:
  explicit BasicSequence(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.empty()) throw WindowError("sequence window must hold at least one value");
    for (std::size_t n = 0; n < values_.size(); ++n) {
      if (!std::isfinite(values_[n].real()) || !std::isfinite(values_[n].imag())) {
        throw DomainError("sequence entry " + std::to_string(n) + " is not finite");
      }
    }
  }

  static BasicSequence from_real(std::span<const double> values) {
    std::vector<Complex> v(values.begin(), values.end());
    return BasicSequence(std::move(v));
  }

  /// Builds x_n = f(n) for n < count.
  template <class F>
  static BasicSequence generate(std::size_t count, F&& f) {
    std::vector<Complex> v;
    v.reserve(count);
    for (std::size_t n = 0; n < count; ++n) v.emplace_back(f(n));
    return BasicSequence(std::move(v));
  }

  std::size_t size() const noexcept { return values_.size(); }
  const Complex& operator[](std::size_t n) const { return values_[n]; }
  const Complex& back() const { return values_.back(); }
  std::span<const Complex> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  bool is_real() const noexcept {
    for (const auto& v : values_) {
      if (v.imag() != 0.0) return false;
    }
    return true;
  }

  std::vector<double> real_part() const {
    std::vector<double> out(values_.size());
    for (std::size_t n = 0; n < values_.size(); ++n) out[n] = values_[n].real();
    return out;
  }

  std::vector<double> imag_part() const {
    std::vector<double> out(values_.size());
    for (std::size_t n = 0; n < values_.size(); ++n) out[n] = values_[n].imag();
    return out;
  }

  friend bool operator==(const BasicSequence&, const BasicSequence&) = default;

 private:
  std::vector<Complex> values_;
};

struct EigenvalueTag {};
struct GammaTag {};

/// Diagonal lambda_0..lambda_{N-1} of a radial operator (or mu, or any other
/// windowed sequence the difference calculus is applied to).
using EigenvalueSequence = BasicSequence<EigenvalueTag>;

/// Eigenvalues of the invariant Laplacian of a radial operator; gamma_n needs
/// lambda_{n+1}, so a gamma window is one shorter than its source.
using GammaSequence = BasicSequence<GammaTag>;

}  // namespace radtoep

#endif  // RADTOEP_SEQUENCE_HPP
