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

#ifndef RADTOEP_ERRORS_HPP
#define RADTOEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace radtoep {

/// Root of the library's exception hierarchy. Every error thrown by radtoep
/// derives from this, so callers that only care about "it failed" can catch
/// one type; the CLI maps the concrete subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index (difference order, sequence position, grid cell) lies outside
/// the finite window the caller supplied.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The window is too short for the requested quantity, or would need to be
/// extended while extension is forbidden.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter is outside its mathematical domain (eps <= 0, C <= 4,
/// negative speed, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure did not reach its requested tolerance. Carries the
/// best estimate obtained and its error estimate.
class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, double estimate, double error_estimate)
      : Error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

/// An internal invariant that the mathematics guarantees was observed to be
/// false. Seeing one of these means a bug (or hostile floating-point input),
/// never a user error.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. The message names the source and the field.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace radtoep

#endif  // RADTOEP_ERRORS_HPP
