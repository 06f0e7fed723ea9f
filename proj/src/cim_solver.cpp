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

#include "simcim/cim_solver.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "simcim/analysis.hpp"
#include "simcim/errors.hpp"
#include "src/batch_engine.hpp"
#include "src/internal.hpp"

namespace simcim {

void CimPhysicsParams::validate() const {
  if (iterations < 1) throw InvalidArgumentError("iterations must be >= 1");
  if (!std::isfinite(w)) throw InvalidArgumentError("w must be finite");
  if (gamma < 0.0 || !std::isfinite(gamma)) {
    throw InvalidArgumentError("gamma must be >= 0");
  }
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw InvalidArgumentError("nonlinear loss s must be > 0");
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
}

double resolve_zeta(const IsingProblem& problem,
                    const CimPhysicsParams& params) {
  if (params.zeta) return *params.zeta;
  return detail::resolve_auto_zeta(problem, params.zeta_auto_scale);
}

void cim_step(const IsingProblem& problem, CimState& state,
              const CimPhysicsParams& params, double zeta,
              const double* coupling, RngStream& rng) {
  const std::int32_t n = problem.size();
  if (state.x.size() != static_cast<std::size_t>(n) ||
      state.p.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgumentError("state size does not match problem");
  }
  if (state.iteration >= params.iterations) {
    throw InvalidArgumentError("step past the configured iteration count");
  }

  const double w = params.w;
  const double gamma = params.gamma;
  const double s = params.s;
  const double noise = params.noise_amplitude;
  bool finite = true;

  for (std::int32_t i = 0; i < n; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    // Re f before Im f; the lane kernel replays the same order.
    const double re = noise > 0.0 ? noise * rng.next_gaussian() : 0.0;
    const double im = noise > 0.0 ? noise * rng.next_gaussian() : 0.0;
    const double x = state.x[k];
    const double p = state.p[k];
    const double r2 = x * x + p * p;
    const double dx = (w - gamma - s * r2) * x + zeta * coupling[k] + re;
    const double dp = (-w - gamma - s * r2) * p + im;
    state.x[k] = x + dx;
    state.p[k] = p + dp;
    finite = finite && std::isfinite(state.x[k]) && std::isfinite(state.p[k]);
  }
  ++state.iteration;

  if (!finite) {
    throw DivergenceError(
        "non-finite quadrature at iteration " +
        std::to_string(state.iteration - 1) +
        ": cubic term s*r^2*amplitude overflowed (per-roundtrip map "
        "unstable; reduce w - gamma, zeta, or amplitudes via larger s)");
  }
}

namespace {

// Lockstep kernel; mirrors cim_step exactly (see SimCimLanes).
class CimLanes {
 public:
  CimLanes(const IsingProblem& problem, const CimPhysicsParams& params,
           double zeta)
      : problem_(problem),
        params_(params),
        zeta_(zeta),
        x_(static_cast<std::size_t>(problem.size()) * kLaneWidth, 0.0),
        p_(x_.size(), 0.0),
        coupling_(x_.size(), 0.0) {}

  void run(std::array<RngStream, kLaneWidth>& rngs, int check_lanes) {
    const std::int32_t n = problem_.size();
    const double w = params_.w;
    const double gamma = params_.gamma;
    const double s = params_.s;
    const double noise = params_.noise_amplitude;

    for (std::int32_t t = 0; t < params_.iterations; ++t) {
      problem_.multiply_lanes(x_.data(), coupling_.data());
      bool finite[kLaneWidth];
      for (int l = 0; l < kLaneWidth; ++l) finite[l] = true;

      for (std::int32_t i = 0; i < n; ++i) {
        double* xi = x_.data() + static_cast<std::size_t>(i) * kLaneWidth;
        double* pi = p_.data() + static_cast<std::size_t>(i) * kLaneWidth;
        const double* ci =
            coupling_.data() + static_cast<std::size_t>(i) * kLaneWidth;
        for (int l = 0; l < kLaneWidth; ++l) {
          auto& rng = rngs[static_cast<std::size_t>(l)];
          const double re = noise > 0.0 ? noise * rng.next_gaussian() : 0.0;
          const double im = noise > 0.0 ? noise * rng.next_gaussian() : 0.0;
          const double x = xi[l];
          const double p = pi[l];
          const double r2 = x * x + p * p;
          const double dx = (w - gamma - s * r2) * x + zeta_ * ci[l] + re;
          const double dp = (-w - gamma - s * r2) * p + im;
          xi[l] = x + dx;
          pi[l] = p + dp;
          finite[l] =
              finite[l] && std::isfinite(xi[l]) && std::isfinite(pi[l]);
        }
      }
      for (int l = 0; l < check_lanes; ++l) {
        if (!finite[l]) {
          throw detail::LaneDivergence{
              l, t,
              "non-finite quadrature: cubic term s*r^2*amplitude overflowed"};
        }
      }
    }
  }

  const double* lane_x() const { return x_.data(); }

 private:
  const IsingProblem& problem_;
  const CimPhysicsParams& params_;
  double zeta_;
  std::vector<double> x_;
  std::vector<double> p_;
  std::vector<double> coupling_;
};

}  // namespace

RunResult run_cim(const IsingProblem& problem, const CimPhysicsParams& params,
                  std::uint64_t seed, const TraceRequest* trace_request,
                  SolverTrace* trace) {
  params.validate();
  const double zeta = resolve_zeta(problem, params);
  const std::int32_t n = problem.size();

  const auto start = std::chrono::steady_clock::now();
  CimState state(n);
  RngStream rng(seed);
  std::vector<double> coupling(static_cast<std::size_t>(n), 0.0);

  if (trace && trace_request) {
    trace->problem_size = n;
    trace->iterations = params.iterations;
    trace->records.clear();
  }

  for (std::int32_t t = 0; t < params.iterations; ++t) {
    problem.multiply(state.x, coupling);
    // Net linear gain w - gamma plays the pump role in the trace.
    detail::append_trace_record(trace, trace_request, t,
                                params.w - params.gamma, state.x, coupling);
    cim_step(problem, state, params, zeta, coupling.data(), rng);
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

RunBatchResult run_cim_batch(const IsingProblem& problem,
                             const CimPhysicsParams& params,
                             const BatchOptions& options) {
  params.validate();
  const double zeta = resolve_zeta(problem, params);
  return detail::run_batch_engine<CimLanes>(problem, params, options, zeta);
}

}  // namespace simcim
