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


// JSON and CSV interchange. Parse failures raise ParseError naming the
// source and the offending field.

#ifndef RADTOEP_IO_HPP
#define RADTOEP_IO_HPP

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "radtoep/approximation.hpp"
#include "radtoep/berezin.hpp"
#include "radtoep/laplacian.hpp"
#include "radtoep/moments.hpp"
#include "radtoep/sequences.hpp"
#include "radtoep/spectrum.hpp"
#include "radtoep/symbol.hpp"

namespace radtoep::io {

using Json = nlohmann::json;

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);
/// Writes j with two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const Json& j);

/// {"values": [[re, im], ...]}; plain numbers are accepted as real entries.
/// source names the input in error messages.
EigenvalueSequence sequence_from_json(const Json& j, const std::string& source);
GammaSequence gamma_from_json(const Json& j, const std::string& source);
Json to_json(std::span<const Complex> values);

/// CSV with header n,re,im.
void write_sequence_csv(std::ostream& out, std::span<const Complex> values);
EigenvalueSequence sequence_from_csv(std::istream& in, const std::string& source);

/// Loads a sequence from .json or .csv, chosen by extension.
EigenvalueSequence read_sequence_file(const std::string& path);

/// {"variant": "power", "s": 2.0, "sup_bound": 1.0}; other variants use
/// "c" (constant), "breakpoints"/"values" (piecewise), "a" (indicator),
/// "beta" (log_oscillation) and "t"/"values" (tabulated). sup_bound is
/// optional and defaults to the natural bound of the variant.
RadialSymbol symbol_from_json(const Json& j, const std::string& source);
Json to_json(const RadialSymbol& b);

/// {"vertices": [[re, im], ...]}
SpectrumPath path_from_json(const Json& j, const std::string& source);
Json to_json(const SpectrumPath& path);

Json to_json(const QuadratureConfig& config);
Json to_json(const SeminormReport& report);
Json to_json(const HausdorffGrid& grid);
Json to_json(const ApproximationResult& result, const ApproximationAudit& audit);
Json to_json(const LconEstimate& estimate);
Json to_json(const CorollaryReport& report);
Json to_json(const ConvergenceReport& report);
Json to_json(const NormEquivalenceReport& report);
Json to_json(const LimitSet& limits);

/// Formats a double as the shortest string that reads back exactly.
std::string format_double(double v);

}  // namespace radtoep::io

#endif  // RADTOEP_IO_HPP
