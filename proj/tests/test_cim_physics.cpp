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
#include "simcim/cim_solver.hpp"
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

void step_once(const IsingProblem& problem, CimState& state,
               const CimPhysicsParams& params, double zeta, RngStream& rng) {
  std::vector<double> coupling(state.x.size());
  problem.multiply(state.x, coupling);
  cim_step(problem, state, params, zeta, coupling.data(), rng);
}

}  // namespace

TEST_CASE("uncoupled mode saturates at the analytic fixed point") {
  IsingProblem p = IsingProblem::from_edges(2, {}, "t");
  struct Combo {
    double w, gamma, s;
  };
  for (const Combo& combo : {Combo{0.1, 0.05, 0.5}, Combo{0.2, 0.0, 1.0},
                             Combo{0.05, 0.01, 0.2}, Combo{0.5, 0.1, 2.0}}) {
    CimPhysicsParams params;
    params.iterations = 20000;
    params.w = combo.w;
    params.gamma = combo.gamma;
    params.s = combo.s;
    params.noise_amplitude = 0.0;
    CimState state(2);
    state.x = {0.01, -0.01};
    state.p = {0.005, 0.005};
    RngStream rng(1);
    for (int t = 0; t < 20000; ++t) {
      step_once(p, state, params, 0.1, rng);
    }
    const double target = std::sqrt((combo.w - combo.gamma) / combo.s);
    CHECK(std::abs(std::abs(state.x[0]) - target) < 1e-6);
    CHECK(std::abs(std::abs(state.x[1]) - target) < 1e-6);
    CHECK(state.x[0] > 0.0);
    CHECK(state.x[1] < 0.0);
    CHECK(std::abs(state.p[0]) < 1e-10);
    CHECK(std::abs(state.p[1]) < 1e-10);
  }
}

TEST_CASE("below-threshold gain decays the mode to zero") {
  IsingProblem p = IsingProblem::from_edges(1, {}, "t");
  CimPhysicsParams params;
  params.iterations = 5000;
  params.w = 0.02;
  params.gamma = 0.08;
  params.s = 0.5;
  params.noise_amplitude = 0.0;
  CimState state(1);
  state.x = {0.3};
  state.p = {0.2};
  RngStream rng(1);
  for (int t = 0; t < 5000; ++t) {
    step_once(p, state, params, 0.1, rng);
  }
  CHECK(std::abs(state.x[0]) < 1e-10);
  CHECK(std::abs(state.p[0]) < 1e-10);
}

TEST_CASE("x update matches the simplified solver in the linear regime") {
  // With p = 0, zero noise, and negligible nonlinear loss, one roundtrip
  // of the physics map must equal one step of the simplified dynamics
  // with v = w - gamma and no momentum.
  IsingProblem p = gaussian_instance(12, 7);
  const double w = 0.07, gamma = 0.03, zeta = 0.02;

  CimPhysicsParams cim_params;
  cim_params.w = w;
  cim_params.gamma = gamma;
  cim_params.s = 1e-30;
  cim_params.noise_amplitude = 0.0;
  // Tiny amplitudes keep both trajectories far from saturation and the
  // clamp for all 100 compared steps.
  CimState cim_state(12);
  RngStream init(9);
  for (double& v : cim_state.x) v = 1e-9 * init.next_gaussian();

  SimCimParams sim_params;
  sim_params.noise_amplitude = 0.0;
  sim_params.momentum_beta = 0.0;
  SimCimState sim_state(12);
  sim_state.x = cim_state.x;
  PumpSchedule schedule = PumpSchedule::constant(w - gamma, 100);

  RngStream rng_a(3), rng_b(3);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> coupling(12);
    p.multiply(cim_state.x, coupling);
    cim_step(p, cim_state, cim_params, zeta, coupling.data(), rng_a);

    std::vector<double> coupling_b(12);
    p.multiply(sim_state.x, coupling_b);
    simcim_step(p, sim_state, sim_params, schedule, zeta, coupling_b.data(),
                rng_b);
    for (std::size_t i = 0; i < 12; ++i) {
      CHECK(cim_state.x[i] ==
            doctest::Approx(sim_state.x[i]).epsilon(1e-12));
      CHECK(cim_state.p[i] == 0.0);
    }
  }
}

TEST_CASE("noise draws real then imaginary parts per spin") {
  IsingProblem p = IsingProblem::from_edges(3, {}, "t");
  CimPhysicsParams params;
  params.w = 0.0;
  params.gamma = 0.0;
  params.s = 1.0;
  params.noise_amplitude = 0.25;
  CimState state(3);
  RngStream rng(42);
  step_once(p, state, params, 0.1, rng);

  RngStream reference(42);
  for (std::size_t i = 0; i < 3; ++i) {
    const double re = 0.25 * reference.next_gaussian();
    const double im = 0.25 * reference.next_gaussian();
    CHECK(state.x[i] == re);
    CHECK(state.p[i] == im);
  }
}

TEST_CASE("readout is by sign of the position quadrature") {
  IsingProblem p = gaussian_instance(14, 77);
  CimPhysicsParams params;
  params.iterations = 600;
  RunResult r = run_cim(p, params, 5, nullptr, nullptr);
  REQUIRE(r.spins.size() == 14);
  for (std::int8_t s : r.spins.spins) CHECK((s == 1 || s == -1));
  CHECK(r.cut == doctest::Approx(cut_value(p, r.spins)));
}

TEST_CASE("best of 100 default runs matches the n=14 optimum") {
  IsingProblem p = gaussian_instance(14, 123);
  BruteForceResult opt = brute_force_optimum(p);
  CimPhysicsParams params;
  BatchOptions options;
  options.runs = 100;
  options.master_seed = 11;
  options.threads = 1;
  RunBatchResult batch = run_cim_batch(p, params, options);
  const double best =
      batch.runs[static_cast<std::size_t>(batch.best_run)].cut;
  CHECK(best == doctest::Approx(opt.max_cut).epsilon(1e-9));
}

TEST_CASE("runs are deterministic in the seed") {
  IsingProblem p = gaussian_instance(20, 15);
  CimPhysicsParams params;
  params.iterations = 300;
  RunResult a = run_cim(p, params, 31, nullptr, nullptr);
  RunResult b = run_cim(p, params, 31, nullptr, nullptr);
  CHECK(a.energy == b.energy);
  CHECK(a.spins.spins == b.spins.spins);
}

TEST_CASE("cubic blow-up reports divergence") {
  IsingProblem p = gaussian_instance(16, 3);
  CimPhysicsParams params;
  params.zeta = 1e4;
  params.noise_amplitude = 0.1;
  params.iterations = 1000;
  CHECK_THROWS_AS(run_cim(p, params, 2, nullptr, nullptr), DivergenceError);
}

TEST_CASE("parameter validation rejects bad values") {
  CimPhysicsParams params;
  params.s = 0.0;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
  params = CimPhysicsParams{};
  params.gamma = -0.1;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
  params = CimPhysicsParams{};
  params.iterations = 0;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
}
