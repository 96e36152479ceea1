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

#ifndef RADTOEP_PARALLEL_HPP
#define RADTOEP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace radtoep {

/// Caps the number of worker threads used by parallel loops inside the
/// library. 0 restores the default (hardware concurrency).
void set_max_threads(unsigned count);
unsigned max_threads();

/// Runs body(i) for i in [0, count), statically partitioned over at most
/// max_threads() threads. Each index is visited exactly once, so results
/// written to per-index slots are independent of the thread count. The first
/// exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace radtoep

#endif  // RADTOEP_PARALLEL_HPP
