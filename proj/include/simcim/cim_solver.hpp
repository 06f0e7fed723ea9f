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

#ifndef SIMCIM_CIM_SOLVER_HPP
#define SIMCIM_CIM_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "simcim/batch.hpp"
#include "simcim/ising_problem.hpp"
#include "simcim/random.hpp"
#include "simcim/trace.hpp"

namespace simcim {

// Reference integrator of the full per-roundtrip optical dynamics. The
// complex mode amplitude a = (x + i p)/sqrt(2) evolves as
//   dx_i = ( w - gamma - s (x_i^2 + p_i^2)) x_i + zeta (J x)_i + Re f_i
//   dp_i = (-w - gamma - s (x_i^2 + p_i^2)) p_i            + Im f_i
// applied as an explicit per-roundtrip map. Above threshold (w > gamma)
// an uncoupled mode saturates at |x| = sqrt((w - gamma) / s), p -> 0.
struct CimPhysicsParams {
  std::int32_t iterations = 1000;

  double w = 0.1;        // parametric gain per roundtrip
  double gamma = 0.05;   // linear loss (>= 0)
  double s = 0.5;        // nonlinear loss coefficient (> 0)

  std::optional<double> zeta;
  double zeta_auto_scale = 0.05;

  double noise_amplitude = 0.01;  // per quadrature component

  void validate() const;
};

double resolve_zeta(const IsingProblem& problem, const CimPhysicsParams& params);

struct CimState {
  std::vector<double> x;  // position quadratures
  std::vector<double> p;  // momentum quadratures
  std::int32_t iteration = 0;

  explicit CimState(std::int32_t n)
      : x(static_cast<std::size_t>(n), 0.0),
        p(static_cast<std::size_t>(n), 0.0) {}
};

// One roundtrip; coupling must hold J * state.x. Draws Re f then Im f
// per spin. Throws DivergenceError naming the cubic loss blow-up when a
// quadrature turns non-finite.
void cim_step(const IsingProblem& problem, CimState& state,
              const CimPhysicsParams& params, double zeta,
              const double* coupling, RngStream& rng);

// Spin readout is by sign of x.
RunResult run_cim(const IsingProblem& problem, const CimPhysicsParams& params,
                  std::uint64_t seed, const TraceRequest* trace_request,
                  SolverTrace* trace);

RunBatchResult run_cim_batch(const IsingProblem& problem,
                             const CimPhysicsParams& params,
                             const BatchOptions& options);

}  // namespace simcim

#endif  // SIMCIM_CIM_SOLVER_HPP
