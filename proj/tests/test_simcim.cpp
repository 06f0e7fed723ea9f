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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "simcim/analysis.hpp"
#include "simcim/errors.hpp"
#include "simcim/ising_problem.hpp"
#include "simcim/random.hpp"
#include "simcim/simcim_solver.hpp"

using namespace simcim;

namespace {

IsingProblem gaussian_instance(std::int32_t n, std::uint64_t seed) {
  GraphGenSpec spec;
  spec.n = n;
  spec.distribution = GaussianCouplings{0.0, 1.0};
  spec.seed = seed;
  return generate_random(spec);
}

// Advances the state one iteration, computing the matvec the caller of
// simcim_step is responsible for.
void step_once(const IsingProblem& problem, SimCimState& state,
               const SimCimParams& params, const PumpSchedule& schedule,
               double zeta, RngStream& rng) {
  std::vector<double> coupling(state.x.size());
  problem.multiply(state.x, coupling);
  simcim_step(problem, state, params, schedule, zeta, coupling.data(), rng);
}

}  // namespace

TEST_CASE("activation clamps sign-preservingly") {
  CHECK(activation(0.5, 1.0) == 0.5);
  CHECK(activation(-2.0, 1.0) == -1.0);
  CHECK(activation(1.0, 1.0) == 1.0);
  CHECK(activation(-1.0, 1.0) == -1.0);
  CHECK(activation(7.25, 2.0) == 2.0);
}

TEST_CASE("zero state is a fixed point of noiseless dynamics") {
  IsingProblem p = gaussian_instance(8, 1);
  SimCimParams params;
  params.noise_amplitude = 0.0;
  params.momentum_beta = 0.0;
  SimCimState state(8);
  PumpSchedule schedule = PumpSchedule::constant(-0.3, 100);
  RngStream rng(7);
  for (int t = 0; t < 100; ++t) {
    step_once(p, state, params, schedule, 0.1, rng);
  }
  for (double v : state.x) CHECK(v == 0.0);
}

TEST_CASE("single uncoupled spin grows geometrically until clamped") {
  IsingProblem p = IsingProblem::from_edges(1, {}, "t");
  SimCimParams params;
  params.noise_amplitude = 0.0;
  params.momentum_beta = 0.0;
  params.x_sat = 1.0;
  PumpSchedule schedule = PumpSchedule::constant(0.1, 200);
  SimCimState state(1);
  state.x[0] = 0.01;
  RngStream rng(1);
  double expected = 0.01;
  for (int t = 0; t < 200; ++t) {
    step_once(p, state, params, schedule, 0.05, rng);
    expected = std::min(expected * 1.1, 1.0);
    CHECK(state.x[0] == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(state.x[0] == 1.0);
}

TEST_CASE("ferromagnetic pair aligns in nearly all runs") {
  IsingProblem p = IsingProblem::from_edges(2, {{0, 1, 1.0}}, "t");
  SimCimParams params;
  params.zeta = 0.1;
  params.noise_amplitude = 0.01;
  params.v_start = -1.0;
  params.v_end = 0.0;
  params.iterations = 1000;
  BatchOptions options;
  options.runs = 100;
  options.master_seed = 2024;
  options.threads = 1;
  RunBatchResult batch = run_simcim_batch(p, params, options);
  int aligned = 0;
  for (const RunResult& r : batch.runs) {
    if (r.spins.spins[0] == r.spins.spins[1]) ++aligned;
  }
  CHECK(aligned >= 99);
}

TEST_CASE("noiseless linear step preserves eigenvectors with factor 1+v+zeta*lambda") {
  // Pair coupling: (1,1) has eigenvalue +j, (1,-1) has -j.
  const double j = 0.8, v = -0.2, zeta = 0.3;
  IsingProblem pair = IsingProblem::from_edges(2, {{0, 1, j}}, "t");
  SimCimParams params;
  params.noise_amplitude = 0.0;
  params.momentum_beta = 0.0;
  PumpSchedule schedule = PumpSchedule::constant(v, 10);
  RngStream rng(3);

  SimCimState plus(2);
  plus.x = {0.1, 0.1};
  step_once(pair, plus, params, schedule, zeta, rng);
  const double factor_plus = 1.0 + v + zeta * j;
  CHECK(plus.x[0] == doctest::Approx(0.1 * factor_plus).epsilon(1e-10));
  CHECK(plus.x[1] == doctest::Approx(0.1 * factor_plus).epsilon(1e-10));

  SimCimState minus(2);
  minus.x = {0.1, -0.1};
  minus.iteration = 0;
  step_once(pair, minus, params, schedule, zeta, rng);
  const double factor_minus = 1.0 + v - zeta * j;
  CHECK(minus.x[0] == doctest::Approx(0.1 * factor_minus).epsilon(1e-10));
  CHECK(minus.x[1] == doctest::Approx(-0.1 * factor_minus).epsilon(1e-10));

  // Four-cycle: the all-ones vector is an eigenvector with eigenvalue 2.
  IsingProblem cycle = IsingProblem::from_edges(
      4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}}, "cycle");
  SimCimState ones(4);
  ones.x = {0.05, 0.05, 0.05, 0.05};
  std::vector<double> coupling(4);
  cycle.multiply(ones.x, coupling);
  simcim_step(cycle, ones, params, schedule, zeta, coupling.data(), rng);
  const double factor_cycle = 1.0 + v + zeta * 2.0;
  for (double x : ones.x) {
    CHECK(x == doctest::Approx(0.05 * factor_cycle).epsilon(1e-10));
  }
}

TEST_CASE("below-threshold noiseless dynamics contract the norm") {
  IsingProblem p = gaussian_instance(24, 6);
  SpectralInfo info = power_iteration(p, 1e-8, 2000, 99);
  REQUIRE(info.converged);
  const double zeta = 0.1 / info.lambda_max;
  SimCimParams params;
  params.noise_amplitude = 0.0;
  params.momentum_beta = 0.0;
  PumpSchedule schedule = PumpSchedule::constant(-0.5, 60);
  SimCimState state(24);
  RngStream init(5);
  for (double& v : state.x) v = 0.01 * init.next_gaussian();
  RngStream rng(8);
  double prev = 0.0;
  for (double v : state.x) prev += v * v;
  for (int t = 0; t < 60; ++t) {
    step_once(p, state, params, schedule, zeta, rng);
    double now = 0.0;
    for (double v : state.x) now += v * v;
    CHECK(now <= prev * (1.0 + 1e-12));
    prev = now;
  }
}

TEST_CASE("feedforward equals negative energy gradient") {
  IsingProblem p = gaussian_instance(20, 12);
  const double zeta = 0.37;
  RngStream rng(4);
  std::vector<double> x(20);
  for (double& v : x) v = 0.5 * rng.next_gaussian();

  // Independent continuous-relaxation energy from the edge list.
  const auto h = [&](const std::vector<double>& y) {
    double sum = 0.0;
    p.for_each_edge([&](std::int32_t a, std::int32_t b, double w) {
      sum += w * y[static_cast<std::size_t>(a)] *
             y[static_cast<std::size_t>(b)];
    });
    return -sum;
  };

  std::vector<double> feedforward(20);
  p.multiply(x, feedforward);
  const double eps = 1e-6;
  for (std::size_t i = 0; i < 20; ++i) {
    std::vector<double> hi = x, lo = x;
    hi[i] += eps;
    lo[i] -= eps;
    const double fd = (h(hi) - h(lo)) / (2.0 * eps);
    CHECK(zeta * feedforward[i] ==
          doctest::Approx(-zeta * fd).epsilon(1e-6));
  }
}

TEST_CASE("amplitudes never exceed the saturation bound") {
  IsingProblem p = gaussian_instance(32, 21);
  SimCimParams params;
  params.zeta = 0.8;  // exaggerated coupling
  params.noise_amplitude = 0.5;
  params.x_sat = 0.75;
  PumpSchedule schedule = params.make_schedule();
  const double zeta = *params.zeta;
  SimCimState state(32);
  RngStream rng(17);
  for (int t = 0; t < params.iterations; ++t) {
    step_once(p, state, params, schedule, zeta, rng);
    for (double v : state.x) CHECK(std::abs(v) <= params.x_sat);
  }
}

TEST_CASE("runs are deterministic in the seed") {
  IsingProblem p = gaussian_instance(40, 31);
  SimCimParams params;
  params.iterations = 300;
  RunResult a = run_simcim(p, params, 555, nullptr, nullptr);
  RunResult b = run_simcim(p, params, 555, nullptr, nullptr);
  CHECK(a.energy == b.energy);
  CHECK(a.cut == b.cut);
  CHECK(a.spins.spins == b.spins.spins);

  RunResult c = run_simcim(p, params, 556, nullptr, nullptr);
  CHECK(a.spins.spins != c.spins.spins);
}

TEST_CASE("zero couplings with zero noise read out as all plus one") {
  IsingProblem p = IsingProblem::from_edges(6, {}, "t");
  SimCimParams params;
  params.noise_amplitude = 0.0;
  params.iterations = 50;
  RunResult r = run_simcim(p, params, 1, nullptr, nullptr);
  CHECK(r.energy == 0.0);
  CHECK(r.cut == 0.0);
  for (std::int8_t s : r.spins.spins) CHECK(s == 1);
}

TEST_CASE("best of 100 default-parameter runs finds the n=16 optimum") {
  IsingProblem p = gaussian_instance(16, 4242);
  BruteForceResult opt = brute_force_optimum(p);
  SimCimParams params;
  BatchOptions options;
  options.runs = 100;
  options.master_seed = 7;
  options.threads = 1;
  RunBatchResult batch = run_simcim_batch(p, params, options);
  const double best =
      batch.runs[static_cast<std::size_t>(batch.best_run)].cut;
  CHECK(best == doctest::Approx(opt.max_cut).epsilon(1e-9));
}

TEST_CASE("trace records schedule values and respects the stride") {
  IsingProblem p = gaussian_instance(12, 9);
  SimCimParams params;
  params.iterations = 100;
  TraceRequest request;
  request.stride = 10;
  request.max_tracked_spins = 4;
  SolverTrace trace;
  run_simcim(p, params, 3, &request, &trace);

  CHECK(trace.problem_size == 12);
  CHECK(trace.iterations == 100);
  REQUIRE(trace.records.size() == 10);
  PumpSchedule schedule = params.make_schedule();
  for (std::size_t k = 0; k < trace.records.size(); ++k) {
    const TraceRecord& rec = trace.records[k];
    CHECK(rec.iteration == static_cast<std::int32_t>(k) * 10);
    CHECK(rec.pump == schedule.value(rec.iteration));
    CHECK(rec.amplitudes.size() == 4);
  }
  // The state starts at zero, so the first proximity sample is undefined.
  CHECK(std::isnan(trace.records[0].eig_proximity));
  CHECK_FALSE(std::isnan(trace.records.back().eig_proximity));
}

TEST_CASE("overflowing coupling strength reports divergence") {
  IsingProblem p = gaussian_instance(16, 2);
  SimCimParams params;
  params.zeta = 1e308;
  params.noise_amplitude = 0.1;
  params.iterations = 50;
  CHECK_THROWS_AS(run_simcim(p, params, 1, nullptr, nullptr),
                  DivergenceError);
}

TEST_CASE("parameter validation rejects bad values") {
  SimCimParams params;
  params.iterations = 0;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
  params = SimCimParams{};
  params.zeta = -1.0;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
  params = SimCimParams{};
  params.momentum_beta = 1.0;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
  params = SimCimParams{};
  params.x_sat = 0.0;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
  params = SimCimParams{};
  params.noise_amplitude = -0.1;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
}
