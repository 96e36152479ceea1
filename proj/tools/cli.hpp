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


#ifndef RADTOEP_TOOLS_CLI_HPP
#define RADTOEP_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace radtoep::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kValidation = 2,
  kTolerance = 3,
  kAssertion = 4,
};

/// Runs one invocation. args excludes the program name. Reports and data
/// without an output path go to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace radtoep::cli

#endif  // RADTOEP_TOOLS_CLI_HPP
