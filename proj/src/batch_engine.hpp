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

#ifndef SIMCIM_SRC_BATCH_ENGINE_HPP
#define SIMCIM_SRC_BATCH_ENGINE_HPP

#include <algorithm>
#include <array>
#include <chrono>
#include <string>
#include <vector>

#include "simcim/batch.hpp"
#include "simcim/errors.hpp"
#include "simcim/ising_problem.hpp"
#include "simcim/parallel.hpp"
#include "simcim/random.hpp"
#include "simcim/trace.hpp"

namespace simcim::detail {

// Raised by lane kernels; the engine converts it to a DivergenceError
// naming the failed run index.
struct LaneDivergence {
  int lane = 0;
  std::int32_t iteration = 0;
  std::string message;
};

// Runs a batch as lane blocks of kLaneWidth runs advanced in lockstep.
//
// LaneSolver contract:
//   LaneSolver(problem, params, zeta)   per-block instance, owns buffers
//   void run(rngs, check_lanes)         full evolution; throws
//                                       LaneDivergence for a lane among
//                                       the first check_lanes
//   const double* lane_x() const        final amplitudes, interleaved
//                                       x[spin * kLaneWidth + lane]
//
// Lane l of block b is run index b * kLaneWidth + l and consumes the RNG
// stream seeded derive_run_seed(master_seed, index). Inactive trailing
// lanes of the last block mirror lane 0's seed; they are computed but
// never read, so results are identical for any thread count.
template <typename LaneSolver, typename Params>
RunBatchResult run_batch_engine(const IsingProblem& problem,
                                const Params& params,
                                const BatchOptions& options, double zeta) {
  if (options.runs < 1) {
    throw InvalidArgumentError("batch needs at least one run");
  }
  const std::int32_t runs = options.runs;
  const std::int32_t n = problem.size();
  const std::int32_t n_blocks = (runs + kLaneWidth - 1) / kLaneWidth;

  RunBatchResult result;
  result.runs.resize(static_cast<std::size_t>(runs));
  result.effective_zeta = zeta;

  const auto batch_start = std::chrono::steady_clock::now();

  parallel_for(static_cast<std::size_t>(n_blocks),
               resolve_thread_count(options.threads), [&](std::size_t task) {
    const std::int32_t block = static_cast<std::int32_t>(task);
    const std::int32_t first = block * kLaneWidth;
    const int active = static_cast<int>(
        std::min<std::int32_t>(kLaneWidth, runs - first));

    std::array<RngStream, kLaneWidth> rngs;
    std::array<std::uint64_t, kLaneWidth> seeds{};
    for (int l = 0; l < kLaneWidth; ++l) {
      const std::int32_t run_index = l < active ? first + l : first;
      seeds[static_cast<std::size_t>(l)] =
          derive_run_seed(options.master_seed, run_index);
      rngs[static_cast<std::size_t>(l)] =
          RngStream(seeds[static_cast<std::size_t>(l)]);
    }

    const auto block_start = std::chrono::steady_clock::now();
    LaneSolver solver(problem, params, zeta);
    try {
      solver.run(rngs, active);
    } catch (const LaneDivergence& d) {
      throw DivergenceError("run " + std::to_string(first + d.lane) +
                            " diverged at iteration " +
                            std::to_string(d.iteration) + ": " + d.message);
    }
    const double block_millis =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - block_start)
            .count();

    const double* lane_x = solver.lane_x();
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int l = 0; l < active; ++l) {
      for (std::int32_t i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] =
            lane_x[static_cast<std::size_t>(i) * kLaneWidth + l];
      }
      RunResult& out = result.runs[static_cast<std::size_t>(first + l)];
      out.spins = spins_from_amplitudes(x);
      out.energy = energy(problem, out.spins);
      out.cut = cut_value(problem, out.spins);
      out.seed = seeds[static_cast<std::size_t>(l)];
      out.millis = block_millis / active;
    }
  });

  result.best_run = find_best_run(result.runs);
  result.total_millis = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - batch_start)
                            .count();
  return result;
}

}  // namespace simcim::detail

#endif  // SIMCIM_SRC_BATCH_ENGINE_HPP
