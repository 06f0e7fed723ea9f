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

#ifndef SIMCIM_NMFA_SOLVER_HPP
#define SIMCIM_NMFA_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "simcim/batch.hpp"
#include "simcim/ising_problem.hpp"
#include "simcim/random.hpp"
#include "simcim/schedule.hpp"
#include "simcim/trace.hpp"

namespace simcim {

// Noisy mean-field annealing baseline. Per iteration t, for every spin:
//   x_i <- (1 - alpha) x_i + alpha tanh(zeta s(t) [(J x)_i + eta_i])
// with eta_i ~ Gaussian(0, noise^2) injected inside the field argument
// and s(t) an optional annealing-strength ramp (1 when disabled).
struct NmfaParams {
  std::int32_t iterations = 1000;

  double alpha = 0.5;  // relaxation rate, in (0, 1]

  // Coupling scale; unset means the same auto rule as the main solver.
  std::optional<double> zeta;
  double zeta_auto_scale = 2.0;

  double noise_amplitude = 0.5;

  // Annealing-strength schedule s(t), a tanh ramp like the pump.
  bool use_schedule = true;
  double s_start = 0.0;
  double s_end = 2.0;
  double steepness = 3.0;

  void validate() const;
  PumpSchedule make_schedule() const;  // constant(1) when disabled
};

double resolve_zeta(const IsingProblem& problem, const NmfaParams& params);

struct NmfaState {
  std::vector<double> x;
  std::int32_t iteration = 0;

  explicit NmfaState(std::int32_t n) : x(static_cast<std::size_t>(n), 0.0) {}
};

// One iteration; coupling must hold J * state.x. Keeps |x_i| < 1.
void nmfa_step(const IsingProblem& problem, NmfaState& state,
               const NmfaParams& params, const PumpSchedule& schedule,
               double zeta, const double* coupling, RngStream& rng);

RunResult run_nmfa(const IsingProblem& problem, const NmfaParams& params,
                   std::uint64_t seed, const TraceRequest* trace_request,
                   SolverTrace* trace);

RunBatchResult run_nmfa_batch(const IsingProblem& problem,
                              const NmfaParams& params,
                              const BatchOptions& options);

}  // namespace simcim

#endif  // SIMCIM_NMFA_SOLVER_HPP
