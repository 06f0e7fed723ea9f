// Copyright 2026 simcim developers
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

#ifndef SIMCIM_TRACE_HPP
#define SIMCIM_TRACE_HPP

#include <cstdint>
#include <vector>

namespace simcim {

// What to record while a single run evolves.
struct TraceRequest {
  std::int32_t stride = 1;             // record every stride-th iteration
  std::int32_t max_tracked_spins = 8;  // amplitudes kept per record
};

// State snapshot taken before the iteration with this index executes.
// eig_proximity compares the state direction with the direction of the
// coupling field Jx; it is NaN while x is still identically zero.
struct TraceRecord {
  std::int32_t iteration = 0;
  double pump = 0.0;
  double eig_proximity = 0.0;
  std::vector<double> amplitudes;  // first max_tracked_spins entries of x
};

struct SolverTrace {
  std::int32_t problem_size = 0;
  std::int32_t iterations = 0;  // total iterations of the traced run
  std::vector<TraceRecord> records;
};

}  // namespace simcim

#endif  // SIMCIM_TRACE_HPP
