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

#include "simcim/nmfa_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "simcim/analysis.hpp"
#include "simcim/errors.hpp"
#include "src/batch_engine.hpp"
#include "src/internal.hpp"

namespace simcim {

namespace {

// Largest double below 1. tanh saturates to exactly 1.0 for large fields;
// capping here keeps the documented open-interval bound |x| < 1.
constexpr double kAmplitudeCap = 0x1.fffffffffffffp-1;

double nmfa_update(double x, double field, double alpha) {
  const double next = (1.0 - alpha) * x + alpha * std::tanh(field);
  return std::clamp(next, -kAmplitudeCap, kAmplitudeCap);
}

}  // namespace

void NmfaParams::validate() const {
  if (iterations < 1) throw InvalidArgumentError("iterations must be >= 1");
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw InvalidArgumentError("alpha must lie in (0, 1]");
  }
  if (zeta && (!(*zeta > 0.0) || !std::isfinite(*zeta))) {
    throw InvalidArgumentError("zeta must be > 0");
  }
  if (!(zeta_auto_scale > 0.0) || !std::isfinite(zeta_auto_scale)) {
    throw InvalidArgumentError("zeta auto scale must be > 0");
  }
  if (noise_amplitude < 0.0 || !std::isfinite(noise_amplitude)) {
    throw InvalidArgumentError("noise amplitude must be >= 0");
  }
  make_schedule();
}

PumpSchedule NmfaParams::make_schedule() const {
  if (!use_schedule) return PumpSchedule::constant(1.0, iterations);
  return PumpSchedule::tanh_ramp(s_start, s_end, steepness, iterations);
}

double resolve_zeta(const IsingProblem& problem, const NmfaParams& params) {
  if (params.zeta) return *params.zeta;
  return detail::resolve_auto_zeta(problem, params.zeta_auto_scale);
}

void nmfa_step(const IsingProblem& problem, NmfaState& state,
               const NmfaParams& params, const PumpSchedule& schedule,
               double zeta, const double* coupling, RngStream& rng) {
  const std::int32_t n = problem.size();
  if (state.x.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("state size does not match problem");
  }
  if (state.iteration >= params.iterations) {
    throw InvalidArgumentError("step past the configured iteration count");
  }

  const double s = schedule.value(state.iteration);
  const double noise = params.noise_amplitude;
  const double alpha = params.alpha;
  bool finite = true;

  for (std::int32_t i = 0; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    const double eta = noise > 0.0 ? noise * rng.next_gaussian() : 0.0;
    const double field = zeta * s * (coupling[k] + eta);
    const double next = nmfa_update(state.x[k], field, alpha);
    state.x[k] = next;
    finite = finite && std::isfinite(next);
  }
  ++state.iteration;

  if (!finite) {
    throw DivergenceError("non-finite mean-field value at iteration " +
                          std::to_string(state.iteration - 1));
  }
}

namespace {

// Lockstep kernel; mirrors nmfa_step exactly (see SimCimLanes).
class NmfaLanes {
 public:
  NmfaLanes(const IsingProblem& problem, const NmfaParams& params, double zeta)
      : problem_(problem),
        params_(params),
        schedule_(params.make_schedule()),
        zeta_(zeta),
        x_(static_cast<std::size_t>(problem.size()) * kLaneWidth, 0.0),
        coupling_(x_.size(), 0.0) {}

  void run(std::array<RngStream, kLaneWidth>& rngs, int check_lanes) {
    const std::int32_t n = problem_.size();
    const double noise = params_.noise_amplitude;
    const double alpha = params_.alpha;

    for (std::int32_t t = 0; t < params_.iterations; ++t) {
      problem_.multiply_lanes(x_.data(), coupling_.data());
      const double s = schedule_.value(t);
      bool finite[kLaneWidth];
      for (int l = 0; l < kLaneWidth; ++l) finite[l] = true;

      for (std::int32_t i = 0; i < n; ++i) {
        double* xi = x_.data() + static_cast<std::size_t>(i) * kLaneWidth;
        const double* ci =
            coupling_.data() + static_cast<std::size_t>(i) * kLaneWidth;
        for (int l = 0; l < kLaneWidth; ++l) {
          const double eta =
              noise > 0.0
                  ? noise * rngs[static_cast<std::size_t>(l)].next_gaussian()
                  : 0.0;
          const double field = zeta_ * s * (ci[l] + eta);
          const double next = nmfa_update(xi[l], field, alpha);
          xi[l] = next;
          finite[l] = finite[l] && std::isfinite(next);
        }
      }
      for (int l = 0; l < check_lanes; ++l) {
        if (!finite[l]) {
          throw detail::LaneDivergence{l, t, "non-finite mean-field value"};
        }
      }
    }
  }

  const double* lane_x() const { return x_.data(); }

 private:
  const IsingProblem& problem_;
  const NmfaParams& params_;
  PumpSchedule schedule_;
  double zeta_;
  std::vector<double> x_;
  std::vector<double> coupling_;
};

}  // namespace

RunResult run_nmfa(const IsingProblem& problem, const NmfaParams& params,
                   std::uint64_t seed, const TraceRequest* trace_request,
                   SolverTrace* trace) {
  params.validate();
  const double zeta = resolve_zeta(problem, params);
  const PumpSchedule schedule = params.make_schedule();
  const std::int32_t n = problem.size();

  const auto start = std::chrono::steady_clock::now();
  NmfaState state(n);
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
    nmfa_step(problem, state, params, schedule, zeta, coupling.data(), rng);
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

RunBatchResult run_nmfa_batch(const IsingProblem& problem,
                              const NmfaParams& params,
                              const BatchOptions& options) {
  params.validate();
  const double zeta = resolve_zeta(problem, params);
  return detail::run_batch_engine<NmfaLanes>(problem, params, options, zeta);
}

}  // namespace simcim
