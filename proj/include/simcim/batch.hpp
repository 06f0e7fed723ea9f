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

#ifndef SIMCIM_BATCH_HPP
#define SIMCIM_BATCH_HPP

#include <cstdint>
#include <vector>

#include "simcim/ising_problem.hpp"

namespace simcim {

struct BatchOptions {
  std::int32_t runs = 1;
  std::uint64_t master_seed = 0;
  // <= 0 means use all hardware threads. The thread count affects wall
  // time only, never results: run r always consumes the RNG stream
  // derive_run_seed(master_seed, r) and lane blocks are fixed.
  std::int32_t threads = 0;
};

// Outcome of one annealing run, already read out to spins.
struct RunResult {
  SpinConfig spins;
  double energy = 0.0;
  double cut = 0.0;
  std::uint64_t seed = 0;
  // Wall time attributed to this run. Runs execute in lane blocks, so
  // this is the block time divided by the block's run count.
  double millis = 0.0;
};

struct RunBatchResult {
  std::vector<RunResult> runs;
  std::int32_t best_run = -1;  // lowest energy; first such index on ties
  // Coupling scale the runs actually used (resolved from the auto rule
  // when the solver parameter was left unset).
  double effective_zeta = 0.0;
  double total_millis = 0.0;
};

// Scans for the lowest-energy run; first index wins ties. -1 when empty.
std::int32_t find_best_run(const std::vector<RunResult>& runs);

}  // namespace simcim

#endif  // SIMCIM_BATCH_HPP
