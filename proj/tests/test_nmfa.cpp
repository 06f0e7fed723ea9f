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
#include "simcim/nmfa_solver.hpp"
#include "simcim/random.hpp"

using namespace simcim;

namespace {

IsingProblem gaussian_instance(std::int32_t n, std::uint64_t seed) {
  GraphGenSpec spec;
  spec.n = n;
  spec.distribution = GaussianCouplings{0.0, 1.0};
  spec.seed = seed;
  return generate_random(spec);
}

void step_once(const IsingProblem& problem, NmfaState& state,
               const NmfaParams& params, const PumpSchedule& schedule,
               double zeta, RngStream& rng) {
  std::vector<double> coupling(state.x.size());
  problem.multiply(state.x, coupling);
  nmfa_step(problem, state, params, schedule, zeta, coupling.data(), rng);
}

}  // namespace

TEST_CASE("zero couplings decay geometrically toward zero") {
  IsingProblem p = IsingProblem::from_edges(3, {}, "t");
  NmfaParams params;
  params.alpha = 0.25;
  params.noise_amplitude = 0.0;
  params.use_schedule = false;
  PumpSchedule schedule = params.make_schedule();
  NmfaState state(3);
  state.x = {0.8, -0.6, 0.4};
  RngStream rng(1);
  std::vector<double> expected = state.x;
  for (int t = 0; t < 40; ++t) {
    step_once(p, state, params, schedule, 1.0, rng);
    for (std::size_t i = 0; i < 3; ++i) {
      expected[i] *= 1.0 - params.alpha;
      CHECK(state.x[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("alpha one is the pure mean-field map") {
  IsingProblem p = gaussian_instance(10, 3);
  NmfaParams params;
  params.alpha = 1.0;
  params.noise_amplitude = 0.0;
  params.use_schedule = false;
  PumpSchedule schedule = params.make_schedule();
  const double zeta = 0.4;

  NmfaState state(10);
  RngStream init(2);
  for (double& v : state.x) v = 0.3 * init.next_gaussian();
  std::vector<double> before = state.x;

  std::vector<double> field(10);
  p.multiply(before, field);
  RngStream rng(5);
  nmfa_step(p, state, params, schedule, zeta, field.data(), rng);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(state.x[i] ==
          doctest::Approx(std::tanh(zeta * field[i])).epsilon(1e-14));
  }
}

TEST_CASE("ferromagnetic pair converges to the aligned fixed point") {
  IsingProblem p = IsingProblem::from_edges(2, {{0, 1, 1.0}}, "t");
  NmfaParams params;
  params.alpha = 1.0;
  params.noise_amplitude = 0.0;
  params.use_schedule = false;
  PumpSchedule schedule = params.make_schedule();
  const double zeta = 3.0;
  NmfaState state(2);
  state.x = {0.1, 0.1};
  RngStream rng(1);
  for (int t = 0; t < 200; ++t) {
    step_once(p, state, params, schedule, zeta, rng);
  }
  // Fixed point of x = tanh(zeta x): both components equal and near 1.
  CHECK(state.x[0] == doctest::Approx(state.x[1]).epsilon(1e-12));
  CHECK(state.x[0] > 0.9);
  const double residual = state.x[0] - std::tanh(zeta * state.x[1]);
  CHECK(std::abs(residual) < 1e-8);
}

TEST_CASE("amplitudes stay strictly inside (-1, 1)") {
  IsingProblem p = gaussian_instance(24, 8);
  NmfaParams params;
  params.zeta = 5.0;  // exaggerated field
  params.noise_amplitude = 1.0;
  params.alpha = 0.9;
  PumpSchedule schedule = params.make_schedule();
  NmfaState state(24);
  RngStream rng(3);
  for (int t = 0; t < params.iterations; ++t) {
    std::vector<double> coupling(state.x.size());
    p.multiply(state.x, coupling);
    nmfa_step(p, state, params, schedule, *params.zeta, coupling.data(), rng);
    for (double v : state.x) CHECK(std::abs(v) < 1.0);
  }
}

TEST_CASE("runs are deterministic in the seed") {
  IsingProblem p = gaussian_instance(30, 14);
  NmfaParams params;
  params.iterations = 400;
  RunResult a = run_nmfa(p, params, 88, nullptr, nullptr);
  RunResult b = run_nmfa(p, params, 88, nullptr, nullptr);
  CHECK(a.energy == b.energy);
  CHECK(a.spins.spins == b.spins.spins);
  RunResult c = run_nmfa(p, params, 89, nullptr, nullptr);
  CHECK(a.spins.spins != c.spins.spins);
}

TEST_CASE("zero couplings produce zero cut") {
  IsingProblem p = IsingProblem::from_edges(5, {}, "t");
  NmfaParams params;
  params.iterations = 100;
  RunResult r = run_nmfa(p, params, 4, nullptr, nullptr);
  CHECK(r.cut == 0.0);
  CHECK(r.energy == 0.0);
}

TEST_CASE("best of 100 default-parameter runs finds small optima") {
  int exact = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    IsingProblem p = gaussian_instance(16, 8800 + seed);
    BruteForceResult opt = brute_force_optimum(p);
    NmfaParams params;
    BatchOptions options;
    options.runs = 100;
    options.master_seed = seed;
    options.threads = 1;
    RunBatchResult batch = run_nmfa_batch(p, params, options);
    const double best =
        batch.runs[static_cast<std::size_t>(batch.best_run)].cut;
    if (best >= opt.max_cut - 1e-9 * (1.0 + std::abs(opt.max_cut))) ++exact;
  }
  CHECK(exact >= 9);
}

TEST_CASE("parameter validation rejects bad values") {
  NmfaParams params;
  params.alpha = 0.0;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
  params = NmfaParams{};
  params.alpha = 1.5;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
  params = NmfaParams{};
  params.zeta = 0.0;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
  params = NmfaParams{};
  params.iterations = -5;
  CHECK_THROWS_AS(params.validate(), InvalidArgumentError);
}
