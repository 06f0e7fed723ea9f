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

#include "simcim/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "simcim/batch.hpp"
#include "simcim/errors.hpp"
#include "simcim/random.hpp"
#include "src/internal.hpp"

namespace simcim {

namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double e : v) s += e * e;
  return std::sqrt(s);
}

}  // namespace

SpectralInfo power_iteration(const IsingProblem& problem, double tol,
                             std::int32_t max_iter, std::uint64_t seed) {
  const std::int32_t n = problem.size();
  if (n < 1) throw InvalidArgumentError("power iteration needs n >= 1");
  if (!(tol > 0.0)) throw InvalidArgumentError("tolerance must be > 0");
  if (max_iter < 1) throw InvalidArgumentError("max_iter must be >= 1");

  SpectralInfo info;
  info.dominant_vector.assign(static_cast<std::size_t>(n), 0.0);

  // Shift makes every eigenvalue of J + mu I nonnegative, so the
  // iteration converges to the largest *algebraic* eigenvalue of J.
  const double mu = problem.infinity_norm();
  if (mu == 0.0) {
    info.zero_matrix = true;
    info.converged = true;
    info.dominant_vector[0] = 1.0;
    return info;
  }

  RngStream rng(seed);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& e : v) e = rng.next_gaussian();
  double nv = norm2(v);
  if (nv == 0.0) {
    v[0] = 1.0;
    nv = 1.0;
  }
  for (auto& e : v) e /= nv;

  std::vector<double> jv(static_cast<std::size_t>(n));
  double lambda = 0.0;

  for (std::int32_t it = 1; it <= max_iter; ++it) {
    problem.multiply(v, jv);
    // Rayleigh quotient of the unshifted J at the current unit vector.
    lambda = std::inner_product(v.begin(), v.end(), jv.begin(), 0.0);

    double residual = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const double r = jv[k] - lambda * v[k];
      residual += r * r;
    }
    residual = std::sqrt(residual);

    info.iterations_used = it;
    info.lambda_max = lambda;
    info.residual = residual;
    if (residual < tol) {
      info.converged = true;
      break;
    }
    // Keep the reported (lambda, residual, vector) triple consistent:
    // no update after the last measurement.
    if (it == max_iter) break;

    // Shifted step: w = (J + mu I) v, renormalized.
    double nw = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      jv[k] += mu * v[k];
      nw += jv[k] * jv[k];
    }
    nw = std::sqrt(nw);
    if (nw == 0.0) {
      // v is an exact null vector of the shifted matrix; restart it.
      for (auto& e : v) e = rng.next_gaussian();
      const double nr = norm2(v);
      for (auto& e : v) e /= nr;
      continue;
    }
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = jv[k] / nw;
  }

  info.dominant_vector = std::move(v);
  return info;
}

double eig_proximity(const IsingProblem& problem, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(problem.size())) {
    throw InvalidArgumentError("vector length does not match problem");
  }
  std::vector<double> jx(x.size());
  problem.multiply(x, jx);
  const double value = detail::proximity_from_vectors(x, jx);
  if (std::isnan(value)) {
    throw InvalidArgumentError("eig_proximity undefined: x or Jx is zero");
  }
  return value;
}

BruteForceResult brute_force_optimum(const IsingProblem& problem) {
  const std::int32_t n = problem.size();
  if (n > 24) {
    throw InvalidArgumentError(
        "brute force is guarded to n <= 24 (got n = " + std::to_string(n) +
        ")");
  }

  // Spin-flip symmetry: fix spin 0 to +1 and enumerate the remaining
  // n-1 spins in Gray-code order, updating the energy incrementally via
  // the local field of the one flipped spin.
  const std::int64_t count = std::int64_t{1} << (n - 1);

  // Local full matrix (n <= 24, at most 4.5 KiB) for O(n) field lookups.
  std::vector<double> j_full(static_cast<std::size_t>(n) * n, 0.0);
  problem.for_each_edge([&](std::int32_t i, std::int32_t j, double w) {
    j_full[static_cast<std::size_t>(i) * n + j] = w;
    j_full[static_cast<std::size_t>(j) * n + i] = w;
  });

  SpinConfig config;
  config.spins.assign(static_cast<std::size_t>(n), std::int8_t{1});
  double current = energy(problem, config);

  SpinConfig best_config = config;
  double best_energy = current;

  for (std::int64_t g = 1; g < count; ++g) {
    // Bit that changes between Gray codes of g-1 and g.
    const std::int32_t flip =
        std::countr_zero(static_cast<std::uint64_t>(g)) + 1;  // spin 0 fixed

    // H = -sum_{i<j} J ss; flipping spin k changes H by 2 s_k h_k with
    // h_k = sum_j J_kj s_j evaluated before the flip.
    const double* row = j_full.data() + static_cast<std::size_t>(flip) * n;
    double field = 0.0;
    for (std::int32_t j = 0; j < n; ++j) {
      field += row[j] * config.spins[static_cast<std::size_t>(j)];
    }
    current += 2.0 * field * config.spins[static_cast<std::size_t>(flip)];
    config.spins[static_cast<std::size_t>(flip)] =
        static_cast<std::int8_t>(-config.spins[static_cast<std::size_t>(flip)]);

    // The incremental energy drifts by rounding over 2^(n-1) updates;
    // candidates within the drift margin are re-evaluated exactly, so
    // the reported optimum is the true one.
    if (current < best_energy + 1e-9 * (1.0 + std::abs(best_energy))) {
      const double exact = energy(problem, config);
      if (exact < best_energy) {
        best_energy = exact;
        best_config = config;
      }
      current = exact;
    }
  }

  BruteForceResult result;
  result.best_config = std::move(best_config);
  result.min_energy = best_energy;
  result.max_cut = cut_value(problem, result.best_config);
  return result;
}

Stats compute_stats(std::span<const double> values) {
  if (values.empty()) throw InvalidArgumentError("stats over empty input");
  Stats s;
  s.min = values[0];
  s.max = values[0];
  double sum = 0.0;
  for (double v : values) {
    s.min = std::min(s.min, v);
    s.max = std::max(s.max, v);
    sum += v;
  }
  s.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(ss / static_cast<double>(values.size()));
  return s;
}

Histogram build_histogram(std::span<const double> values, double bin_width) {
  if (values.empty()) throw InvalidArgumentError("histogram over empty input");
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw InvalidArgumentError("bin width must be > 0");
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  Histogram h;
  h.bin_width = bin_width;
  h.first_edge = std::floor(lo / bin_width) * bin_width;
  const double span = (hi - h.first_edge) / bin_width;
  if (span > 1e7) {
    throw InvalidArgumentError("bin width too small for the value range");
  }
  const std::int64_t bins =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(span)) + 1);
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    std::int64_t k =
        static_cast<std::int64_t>(std::floor((v - h.first_edge) / bin_width));
    // Rounding at the exact upper boundary lands one past the end.
    if (k >= bins) k = bins - 1;
    if (k < 0) k = 0;
    ++h.counts[static_cast<std::size_t>(k)];
  }
  return h;
}

double auto_bin_width(std::span<const double> values, bool integer_valued) {
  if (values.empty()) throw InvalidArgumentError("bin width over empty input");
  if (integer_valued) return 1.0;

  // Freedman-Diaconis: 2 IQR / cbrt(count).
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
  };
  const double iqr = quantile(0.75) - quantile(0.25);
  const double width =
      2.0 * iqr / std::cbrt(static_cast<double>(sorted.size()));
  if (!(width > 0.0) || !std::isfinite(width)) return 1.0;
  return width;
}

std::int32_t find_best_run(const std::vector<RunResult>& runs) {
  std::int32_t best = -1;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    if (best < 0 || runs[r].energy < runs[static_cast<std::size_t>(best)].energy) {
      best = static_cast<std::int32_t>(r);
    }
  }
  return best;
}

}  // namespace simcim
