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
#include "doctest.h"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdint>
#include <vector>

#include "simcim/analysis.hpp"
#include "simcim/errors.hpp"
#include "simcim/ising_problem.hpp"
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

Eigen::MatrixXd dense_matrix(const IsingProblem& problem) {
  const std::int32_t n = problem.size();
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  problem.for_each_edge([&](std::int32_t a, std::int32_t b, double w) {
    j(a, b) = w;
    j(b, a) = w;
  });
  return j;
}

// Largest algebraic eigenvalue by a full dense decomposition.
double eigen_lambda_max(const IsingProblem& problem) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_matrix(problem));
  return solver.eigenvalues().maxCoeff();
}

SpinConfig config_from_mask(std::int32_t n, std::uint32_t mask) {
  SpinConfig c;
  for (std::int32_t i = 0; i < n; ++i) {
    c.spins.push_back((mask >> i) & 1u ? 1 : -1);
  }
  return c;
}

}  // namespace

TEST_CASE("power iteration matches a dense eigensolver") {
  struct Case {
    IsingProblem problem;
  };
  std::vector<IsingProblem> problems;
  problems.push_back(gaussian_instance(30, 3));
  {
    GraphGenSpec spec;
    spec.n = 80;
    spec.distribution = DiscreteCouplings{0.05};
    spec.seed = 4;
    problems.push_back(generate_random(spec));
  }
  for (const IsingProblem& p : problems) {
    SpectralInfo info = power_iteration(p, 1e-9, 5000, 0);
    const double reference = eigen_lambda_max(p);
    CHECK(info.converged);
    CHECK(info.lambda_max ==
          doctest::Approx(reference).epsilon(1e-6));
    CHECK(info.residual < 1e-8);

    // The reported vector satisfies the eigen equation it claims to.
    std::vector<double> jv(p.size());
    p.multiply(info.dominant_vector, jv);
    double err = 0.0;
    for (std::size_t k = 0; k < jv.size(); ++k) {
      const double r = jv[k] - info.lambda_max * info.dominant_vector[k];
      err += r * r;
    }
    CHECK(std::sqrt(err) < 1e-8);
  }
}

TEST_CASE("power iteration finds the algebraic maximum, not the largest modulus") {
  // All-negative triangle: spectrum {-2, 1, 1}. An unshifted iteration
  // would lock onto -2; the shifted one must report +1.
  IsingProblem p = IsingProblem::from_edges(
      3, {{0, 1, -1.0}, {0, 2, -1.0}, {1, 2, -1.0}}, "triangle");
  SpectralInfo info = power_iteration(p, 1e-10, 2000, 1);
  CHECK(info.converged);
  CHECK(info.lambda_max == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(info.lambda_max ==
        doctest::Approx(eigen_lambda_max(p)).epsilon(1e-8));
}

TEST_CASE("power iteration vector aligns with a simple dominant mode") {
  // Complete ferromagnetic 4-graph: spectrum {3, -1, -1, -1}, dominant
  // vector is uniform.
  std::vector<Edge> edges;
  for (std::int32_t a = 0; a < 4; ++a) {
    for (std::int32_t b = a + 1; b < 4; ++b) edges.push_back({a, b, 1.0});
  }
  IsingProblem p = IsingProblem::from_edges(4, edges, "k4");
  SpectralInfo info = power_iteration(p, 1e-12, 2000, 2);
  CHECK(info.converged);
  CHECK(info.lambda_max == doctest::Approx(3.0).epsilon(1e-10));
  double dot = 0.0;
  for (double v : info.dominant_vector) dot += v * 0.5;
  CHECK(std::abs(dot) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("power iteration handles the zero matrix") {
  IsingProblem p = IsingProblem::from_edges(5, {}, "empty");
  SpectralInfo info = power_iteration(p, 1e-6, 100, 0);
  CHECK(info.zero_matrix);
  CHECK(info.converged);
  CHECK(info.lambda_max == 0.0);
  CHECK(info.dominant_vector[0] == 1.0);
}

TEST_CASE("power iteration is deterministic in the seed") {
  IsingProblem p = gaussian_instance(40, 6);
  SpectralInfo a = power_iteration(p, 1e-9, 3000, 11);
  SpectralInfo b = power_iteration(p, 1e-9, 3000, 11);
  CHECK(a.lambda_max == b.lambda_max);
  CHECK(a.iterations_used == b.iterations_used);
  CHECK(a.dominant_vector == b.dominant_vector);
}

TEST_CASE("power iteration validates arguments") {
  IsingProblem p = gaussian_instance(8, 1);
  CHECK_THROWS_AS(power_iteration(p, 0.0, 100, 0), InvalidArgumentError);
  CHECK_THROWS_AS(power_iteration(p, 1e-6, 0, 0), InvalidArgumentError);
}

TEST_CASE("eig_proximity is 0 and 2 on eigenvectors of either sign") {
  IsingProblem p = IsingProblem::from_edges(2, {{0, 1, 1.0}}, "pair");
  const double inv = 1.0 / std::sqrt(2.0);
  std::vector<double> plus = {inv, inv};    // eigenvalue +1
  std::vector<double> minus = {inv, -inv};  // eigenvalue -1
  CHECK(eig_proximity(p, plus) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eig_proximity(p, minus) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("eig_proximity stays in [0, 2] on generic vectors") {
  IsingProblem p = gaussian_instance(24, 8);
  RngStream rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(24);
    for (double& v : x) v = rng.next_gaussian();
    const double d = eig_proximity(p, x);
    CHECK(d >= 0.0);
    CHECK(d <= 2.0);
  }
}

TEST_CASE("eig_proximity rejects zero and kernel vectors") {
  IsingProblem p = IsingProblem::from_edges(3, {{0, 1, 1.0}}, "wedge");
  std::vector<double> zero = {0.0, 0.0, 0.0};
  CHECK_THROWS_AS(eig_proximity(p, zero), InvalidArgumentError);
  // x is nonzero but J x = 0: spin 2 is isolated.
  std::vector<double> kernel = {0.0, 0.0, 1.0};
  CHECK_THROWS_AS(eig_proximity(p, kernel), InvalidArgumentError);
}

TEST_CASE("brute force agrees with full enumeration") {
  struct Case {
    IsingProblem problem;
  };
  std::vector<IsingProblem> problems;
  problems.push_back(gaussian_instance(12, 21));
  {
    GraphGenSpec spec;
    spec.n = 10;
    spec.distribution = DiscreteCouplings{0.3};
    spec.seed = 22;
    problems.push_back(generate_random(spec));
  }
  for (const IsingProblem& p : problems) {
    const std::int32_t n = p.size();
    double best_h = 1e300;
    double best_cut = -1e300;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      SpinConfig c = config_from_mask(n, mask);
      best_h = std::min(best_h, energy(p, c));
      best_cut = std::max(best_cut, cut_value(p, c));
    }

    BruteForceResult r = brute_force_optimum(p);
    CHECK(r.min_energy == doctest::Approx(best_h).epsilon(1e-9));
    CHECK(r.max_cut == doctest::Approx(best_cut).epsilon(1e-9));
    CHECK(energy(p, r.best_config) ==
          doctest::Approx(r.min_energy).epsilon(1e-12));
    CHECK(r.best_config.spins[0] == 1);
  }
}

TEST_CASE("brute force handles the trivial pair") {
  IsingProblem p = IsingProblem::from_edges(2, {{0, 1, 1.0}}, "pair");
  BruteForceResult r = brute_force_optimum(p);
  CHECK(r.min_energy == -1.0);
  CHECK(r.max_cut == 0.0);
  CHECK(r.best_config.spins == std::vector<std::int8_t>{1, 1});
}

TEST_CASE("brute force rejects oversized instances") {
  IsingProblem p = IsingProblem::from_edges(25, {}, "big");
  CHECK_THROWS_AS(brute_force_optimum(p), InvalidArgumentError);
}

TEST_CASE("compute_stats on known values") {
  std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  Stats s = compute_stats(v);
  CHECK(s.min == 1.0);
  CHECK(s.max == 4.0);
  CHECK(s.mean == doctest::Approx(2.5).epsilon(1e-15));
  // Population variance of {1,2,3,4} is 1.25.
  CHECK(s.stddev == doctest::Approx(std::sqrt(1.25)).epsilon(1e-15));

  std::vector<double> one = {7.0};
  Stats t = compute_stats(one);
  CHECK(t.mean == 7.0);
  CHECK(t.stddev == 0.0);

  std::vector<double> empty;
  CHECK_THROWS_AS(compute_stats(empty), InvalidArgumentError);
}

TEST_CASE("histogram bins align to integer multiples of the width") {
  std::vector<double> v = {3.0, 3.0, 4.0, 7.0};
  Histogram h = build_histogram(v, 1.0);
  CHECK(h.first_edge == 3.0);
  CHECK(h.counts == std::vector<std::int64_t>{2, 1, 0, 0, 1});

  std::vector<double> mixed = {-1.5, 2.25};
  Histogram g = build_histogram(mixed, 0.5);
  CHECK(g.first_edge == -1.5);
  CHECK(g.counts.size() == 8);
  std::int64_t total = 0;
  for (std::int64_t c : g.counts) total += c;
  CHECK(total == 2);
  CHECK(g.counts.front() == 1);
  CHECK(g.counts.back() == 1);
  CHECK(g.edge(1) == doctest::Approx(-1.0));
}

TEST_CASE("histogram rejects bad input") {
  std::vector<double> v = {1.0};
  CHECK_THROWS_AS(build_histogram(v, 0.0), InvalidArgumentError);
  std::vector<double> empty;
  CHECK_THROWS_AS(build_histogram(empty, 1.0), InvalidArgumentError);
  // A huge range with a tiny width would need > 1e7 bins.
  std::vector<double> wide = {0.0, 1e9};
  CHECK_THROWS_AS(build_histogram(wide, 1e-3), InvalidArgumentError);
}

TEST_CASE("auto_bin_width follows the Freedman-Diaconis rule") {
  CHECK(auto_bin_width(std::vector<double>{5.0, 9.0, 2.0}, true) == 1.0);

  // Quartiles of {0,1,2,3,4} with linear interpolation: 1 and 3, so the
  // rule gives 2 * 2 / cbrt(5).
  std::vector<double> v = {0.0, 1.0, 2.0, 3.0, 4.0};
  CHECK(auto_bin_width(v, false) ==
        doctest::Approx(4.0 / std::cbrt(5.0)).epsilon(1e-12));

  // Degenerate spread falls back to width 1.
  std::vector<double> flat = {2.5, 2.5, 2.5};
  CHECK(auto_bin_width(flat, false) == 1.0);
}
