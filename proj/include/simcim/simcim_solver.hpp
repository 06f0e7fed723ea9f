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

#ifndef SIMCIM_SIMCIM_SOLVER_HPP
#define SIMCIM_SIMCIM_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "simcim/batch.hpp"
#include "simcim/ising_problem.hpp"
#include "simcim/random.hpp"
#include "simcim/schedule.hpp"
#include "simcim/trace.hpp"

namespace simcim {

// Soft-spin annealer. Per iteration t, for every spin i:
//   dx_i = v(t) x_i + zeta (J x)_i + f_i,   f_i ~ Gaussian(0, noise^2)
//   m_i  = beta m_i + (1 - beta) dx_i
//   x_i  = clamp(x_i + m_i)  to [-x_sat, +x_sat]
// starting from x = m = 0.
struct SimCimParams {
  std::int32_t iterations = 1000;

  // Coupling strength. Unset means auto: zeta_auto_scale / lambda_max
  // with lambda_max the power-iteration estimate of J's top eigenvalue.
  std::optional<double> zeta;
  double zeta_auto_scale = 0.5;

  double noise_amplitude = 0.2;
  double x_sat = 1.0;
  double momentum_beta = 0.9;

  // Pump ramp v(t); the run rebuilds it with duration = iterations.
  // Defaults favor exhaustive small-instance search; large dense graphs
  // do better with zeta_auto_scale near 1.3, v_start = -1.3 and noise
  // near 0.01 (see the benchmark presets).
  double v_start = -1.0;
  double v_end = 0.0;
  double steepness = 3.0;

  void validate() const;  // throws InvalidArgumentError
  PumpSchedule make_schedule() const;
};

// Resolves the coupling strength actually used: params.zeta when set,
// otherwise the auto rule (returns zeta_auto_scale when lambda_max <= 0,
// where the dynamics stay stable for any positive zeta).
double resolve_zeta(const IsingProblem& problem, const SimCimParams& params);

inline double activation(double x, double x_sat) {
  if (x > x_sat) return x_sat;
  if (x < -x_sat) return -x_sat;
  return x;
}

struct SimCimState {
  std::vector<double> x;
  std::vector<double> momentum;
  std::int32_t iteration = 0;

  explicit SimCimState(std::int32_t n)
      : x(static_cast<std::size_t>(n), 0.0),
        momentum(static_cast<std::size_t>(n), 0.0) {}
};

// One iteration. coupling must already hold J * state.x (callers batch
// the matvec). zeta is the resolved coupling strength. Throws
// DivergenceError when a non-finite amplitude appears.
void simcim_step(const IsingProblem& problem, SimCimState& state,
                 const SimCimParams& params, const PumpSchedule& schedule,
                 double zeta, const double* coupling, RngStream& rng);

// Full single run; deterministic in seed. trace may be null.
RunResult run_simcim(const IsingProblem& problem, const SimCimParams& params,
                     std::uint64_t seed, const TraceRequest* trace_request,
                     SolverTrace* trace);

// Independent runs with seeds derive_run_seed(master_seed, r). Bit-for-bit
// equal to sequential single runs regardless of thread count.
RunBatchResult run_simcim_batch(const IsingProblem& problem,
                                const SimCimParams& params,
                                const BatchOptions& options);

}  // namespace simcim

#endif  // SIMCIM_SIMCIM_SOLVER_HPP
