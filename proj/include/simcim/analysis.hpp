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

#ifndef SIMCIM_ANALYSIS_HPP
#define SIMCIM_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "simcim/ising_problem.hpp"

namespace simcim {

struct SpectralInfo {
  double lambda_max = 0.0;           // largest algebraic eigenvalue estimate
  std::vector<double> dominant_vector;  // unit norm
  std::int32_t iterations_used = 0;
  double residual = 0.0;  // ||J v - lambda v||
  bool converged = false;
  bool zero_matrix = false;  // J == 0: lambda fixed to 0, vector is e_0
};

// Power iteration on the shifted matrix J + mu I with mu = ||J||_inf,
// which makes the dominant mode of the iteration the largest *algebraic*
// eigenvalue of J. Rayleigh-quotient estimate; deterministic in seed.
SpectralInfo power_iteration(const IsingProblem& problem, double tol,
                             std::int32_t max_iter, std::uint64_t seed);

// || x/||x|| - Jx/||Jx|| ||. Always in [0, 2]; 0 when x is an eigenvector
// with positive eigenvalue, 2 with negative. Throws InvalidArgumentError
// when x or Jx is zero (trace writers record a gap instead).
double eig_proximity(const IsingProblem& problem, std::span<const double> x);

struct BruteForceResult {
  SpinConfig best_config;
  double max_cut = 0.0;
  double min_energy = 0.0;
};

// Exhaustive optimum over 2^(n-1) configurations (spin-flip symmetry
// fixes spin 0 to +1). Guarded to n <= 24.
BruteForceResult brute_force_optimum(const IsingProblem& problem);

struct Stats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

Stats compute_stats(std::span<const double> values);

struct Histogram {
  double bin_width = 0.0;
  double first_edge = 0.0;  // left edge of bin 0
  std::vector<std::int64_t> counts;

  double edge(std::size_t k) const { return first_edge + bin_width * k; }
};

// Bins aligned to integer multiples of bin_width: first_edge =
// floor(min / width) * width; counts always sum to values.size().
Histogram build_histogram(std::span<const double> values, double bin_width);

// Width 1 for integer-valued samples, Freedman-Diaconis otherwise
// (falls back to 1 on degenerate spreads).
double auto_bin_width(std::span<const double> values, bool integer_valued);

}  // namespace simcim

#endif  // SIMCIM_ANALYSIS_HPP
