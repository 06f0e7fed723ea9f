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

#include "simcim/simcim_solver.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "simcim/analysis.hpp"
#include "simcim/errors.hpp"
#include "src/batch_engine.hpp"
#include "src/internal.hpp"

namespace simcim {

void SimCimParams::validate() const {
  if (iterations < 1) throw InvalidArgumentError("iterations must be >= 1");
  if (zeta && (!(*zeta > 0.0) || !std::isfinite(*zeta))) {
    throw InvalidArgumentError("zeta must be > 0");
  }
  if (!(zeta_auto_scale > 0.0) || !std::isfinite(zeta_auto_scale)) {
    throw InvalidArgumentError("zeta auto scale must be > 0");
  }
  if (noise_amplitude < 0.0 || !std::isfinite(noise_amplitude)) {
    throw InvalidArgumentError("noise amplitude must be >= 0");
  }
  if (!(x_sat > 0.0) || !std::isfinite(x_sat)) {
    throw InvalidArgumentError("x_sat must be > 0");
  }
  if (momentum_beta < 0.0 || momentum_beta >= 1.0) {
    throw InvalidArgumentError("momentum beta must lie in [0, 1)");
  }
  make_schedule();  // validates the ramp parameters
}

PumpSchedule SimCimParams::make_schedule() const {
  return PumpSchedule::tanh_ramp(v_start, v_end, steepness, iterations);
}

double resolve_zeta(const IsingProblem& problem, const SimCimParams& params) {
  if (params.zeta) return *params.zeta;
  return detail::resolve_auto_zeta(problem, params.zeta_auto_scale);
}

void simcim_step(const IsingProblem& problem, SimCimState& state,
                 const SimCimParams& params, const PumpSchedule& schedule,
                 double zeta, const double* coupling, RngStream& rng) {
  const std::int32_t n = problem.size();
  if (state.x.size() != static_cast<std::size_t>(n) ||
      state.momentum.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("state size does not match problem");
  }
  if (state.iteration >= params.iterations) {
    throw InvalidArgumentError("step past the configured iteration count");
  }

  const double v = schedule.value(state.iteration);
  const double noise = params.noise_amplitude;
  const double beta = params.momentum_beta;
  const double x_sat = params.x_sat;
  bool finite = true;

  for (std::int32_t i = 0; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    const double f = noise > 0.0 ? noise * rng.next_gaussian() : 0.0;
    const double dx = v * state.x[k] + zeta * coupling[k] + f;
    const double m = beta * state.momentum[k] + (1.0 - beta) * dx;
    state.momentum[k] = m;
    const double moved = state.x[k] + m;
    const double clamped = activation(moved, x_sat);
    state.x[k] = clamped;
    finite = finite && std::isfinite(clamped);
  }
  ++state.iteration;

  if (!finite) {
    throw DivergenceError(
        "non-finite amplitude at iteration " +
        std::to_string(state.iteration - 1) + " (zeta = " +
        std::to_string(zeta) + ", v = " + std::to_string(v) +
        "): zeta * lambda_max too large for the pump ramp");
  }
}

namespace {

// Lockstep kernel for kLaneWidth runs. Arithmetic per spin and RNG draw
// order per stream are identical to simcim_step, and multiply_lanes
// shares multiply's accumulation order, so lane runs reproduce single
// runs bit for bit.
class SimCimLanes {
 public:
  SimCimLanes(const IsingProblem& problem, const SimCimParams& params,
              double zeta)
      : problem_(problem),
        params_(params),
        schedule_(params.make_schedule()),
        zeta_(zeta),
        x_(static_cast<std::size_t>(problem.size()) * kLaneWidth, 0.0),
        momentum_(x_.size(), 0.0),
        coupling_(x_.size(), 0.0) {}

  void run(std::array<RngStream, kLaneWidth>& rngs, int check_lanes) {
    const std::int32_t n = problem_.size();
    const double noise = params_.noise_amplitude;
    const double beta = params_.momentum_beta;
    const double x_sat = params_.x_sat;

    for (std::int32_t t = 0; t < params_.iterations; ++t) {
      problem_.multiply_lanes(x_.data(), coupling_.data());
      const double v = schedule_.value(t);
      bool finite[kLaneWidth];
      for (int l = 0; l < kLaneWidth; ++l) finite[l] = true;

      for (std::int32_t i = 0; i < n; ++i) {
        double* xi = x_.data() + static_cast<std::size_t>(i) * kLaneWidth;
        double* mi = momentum_.data() + static_cast<std::size_t>(i) * kLaneWidth;
        const double* ci =
            coupling_.data() + static_cast<std::size_t>(i) * kLaneWidth;
        for (int l = 0; l < kLaneWidth; ++l) {
          const double f =
              noise > 0.0
                  ? noise * rngs[static_cast<std::size_t>(l)].next_gaussian()
                  : 0.0;
          const double dx = v * xi[l] + zeta_ * ci[l] + f;
          const double m = beta * mi[l] + (1.0 - beta) * dx;
          mi[l] = m;
          const double clamped = activation(xi[l] + m, x_sat);
          xi[l] = clamped;
          finite[l] = finite[l] && std::isfinite(clamped);
        }
      }
      for (int l = 0; l < check_lanes; ++l) {
        if (!finite[l]) {
          throw detail::LaneDivergence{
              l, t,
              "non-finite amplitude (zeta = " + std::to_string(zeta_) +
                  ", v = " + std::to_string(v) +
                  "): zeta * lambda_max too large for the pump ramp"};
        }
      }
    }
  }

  const double* lane_x() const { return x_.data(); }

 private:
  const IsingProblem& problem_;
  const SimCimParams& params_;
  PumpSchedule schedule_;
  double zeta_;
  std::vector<double> x_;
  std::vector<double> momentum_;
  std::vector<double> coupling_;
};

}  // namespace

RunResult run_simcim(const IsingProblem& problem, const SimCimParams& params,
                     std::uint64_t seed, const TraceRequest* trace_request,
                     SolverTrace* trace) {
  params.validate();
  const double zeta = resolve_zeta(problem, params);
  const PumpSchedule schedule = params.make_schedule();
  const std::int32_t n = problem.size();

  const auto start = std::chrono::steady_clock::now();
  SimCimState state(n);
  RngStream rng(seed);
  std::vector<double> coupling(static_cast<std::size_t>(n), 0.0);

  if (trace && trace_request) {
    trace->problem_size = n;
    trace->iterations = params.iterations;
    trace->records.clear();
  }

  for (std::int32_t t = 0; t < params.iterations; ++t) {
    problem.multiply(state.x, coupling);
    detail::append_trace_record(trace, trace_request, t, schedule.value(t),
                                state.x, coupling);
    simcim_step(problem, state, params, schedule, zeta, coupling.data(), rng);
  }

  RunResult result;
  result.spins = spins_from_amplitudes(state.x);
  result.energy = energy(problem, result.spins);
  result.cut = cut_value(problem, result.spins);
  result.seed = seed;
  result.millis = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return result;
}

RunBatchResult run_simcim_batch(const IsingProblem& problem,
                                const SimCimParams& params,
                                const BatchOptions& options) {
  params.validate();
  const double zeta = resolve_zeta(problem, params);
  return detail::run_batch_engine<SimCimLanes>(problem, params, options, zeta);
}

}  // namespace simcim
