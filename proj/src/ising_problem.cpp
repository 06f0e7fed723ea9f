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

#include "simcim/ising_problem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "simcim/errors.hpp"
#include "simcim/random.hpp"

namespace simcim {

namespace {

// Compensated (Kahan) accumulator for the O(n^2) evaluation sums, so the
// cut-energy identity holds far inside its tolerance even on dense
// 2000-node instances. Deterministic: same order, same result.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    double y = v - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

bool is_integer_weight(double w) {
  return std::isfinite(w) && w == std::trunc(w);
}

void check_dimension(std::int32_t n, std::size_t got, const char* what) {
  if (got != static_cast<std::size_t>(n)) {
    throw InvalidArgumentError(std::string(what) + " has length " +
                               std::to_string(got) + ", problem has n = " +
                               std::to_string(n));
  }
}

}  // namespace

IsingProblem IsingProblem::from_edges(std::int32_t n, std::vector<Edge> edges,
                                      std::string name, Storage storage) {
  if (n < 1) throw InvalidArgumentError("node count must be >= 1");

  for (Edge& e : edges) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i < 0 || e.j >= n) {
      throw InvalidArgumentError("edge endpoint out of range [0, " +
                                 std::to_string(n - 1) + "]");
    }
    if (e.i == e.j) throw InvalidArgumentError("self-loop on node " +
                                               std::to_string(e.i));
    if (!std::isfinite(e.weight)) {
      throw InvalidArgumentError("non-finite edge weight");
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t k = 1; k < edges.size(); ++k) {
    if (edges[k].i == edges[k - 1].i && edges[k].j == edges[k - 1].j) {
      throw InvalidArgumentError("duplicate edge (" +
                                 std::to_string(edges[k].i + 1) + ", " +
                                 std::to_string(edges[k].j + 1) + ")");
    }
  }

  IsingProblem p;
  p.n_ = n;
  p.edge_count_ = static_cast<std::int64_t>(edges.size());
  p.name_ = std::move(name);
  p.integer_weights_ = std::all_of(edges.begin(), edges.end(), [](const Edge& e) {
    return is_integer_weight(e.weight);
  });

  const double pairs = 0.5 * static_cast<double>(n) * (n - 1);
  const double density =
      pairs > 0.0 ? static_cast<double>(edges.size()) / pairs : 0.0;
  const bool dense = storage == Storage::kDense ||
                     (storage == Storage::kAuto && density > kDenseThreshold);

  if (dense) {
    p.dense_storage_ = true;
    p.dense_.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (const Edge& e : edges) {
      p.dense_[static_cast<std::size_t>(e.i) * n + e.j] = e.weight;
      p.dense_[static_cast<std::size_t>(e.j) * n + e.i] = e.weight;
    }
  } else {
    p.dense_storage_ = false;
    p.edges_ = std::move(edges);

    // CSR over both directions, columns ascending inside each row; this
    // fixes the per-row accumulation order of the sparse matvec.
    std::vector<std::int32_t> degree(static_cast<std::size_t>(n), 0);
    for (const Edge& e : p.edges_) {
      ++degree[static_cast<std::size_t>(e.i)];
      ++degree[static_cast<std::size_t>(e.j)];
    }
    p.row_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::int32_t i = 0; i < n; ++i) {
      p.row_ptr_[static_cast<std::size_t>(i) + 1] =
          p.row_ptr_[static_cast<std::size_t>(i)] +
          degree[static_cast<std::size_t>(i)];
    }
    p.col_.resize(static_cast<std::size_t>(p.row_ptr_[static_cast<std::size_t>(n)]));
    p.val_.resize(p.col_.size());
    std::vector<std::int64_t> cursor(p.row_ptr_.begin(), p.row_ptr_.end() - 1);
    for (const Edge& e : p.edges_) {
      p.col_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.i)])] = e.j;
      p.val_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.i)]++)] =
          e.weight;
      p.col_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.j)])] = e.i;
      p.val_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.j)]++)] =
          e.weight;
    }
    for (std::int32_t i = 0; i < n; ++i) {
      const std::int64_t lo = p.row_ptr_[static_cast<std::size_t>(i)];
      const std::int64_t hi = p.row_ptr_[static_cast<std::size_t>(i) + 1];
      std::vector<std::pair<std::int32_t, double>> row;
      row.reserve(static_cast<std::size_t>(hi - lo));
      for (std::int64_t k = lo; k < hi; ++k) {
        row.emplace_back(p.col_[static_cast<std::size_t>(k)],
                         p.val_[static_cast<std::size_t>(k)]);
      }
      std::sort(row.begin(), row.end());
      for (std::int64_t k = lo; k < hi; ++k) {
        p.col_[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - lo)].first;
        p.val_[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - lo)].second;
      }
    }
  }
  return p;
}

IsingProblem IsingProblem::from_dense(std::int32_t n,
                                      std::vector<double> couplings,
                                      std::string name, Storage storage) {
  if (n < 1) throw InvalidArgumentError("node count must be >= 1");
  if (couplings.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidArgumentError("coupling matrix must have n*n entries");
  }
  std::vector<Edge> edges;
  for (std::int32_t i = 0; i < n; ++i) {
    if (couplings[static_cast<std::size_t>(i) * n + i] != 0.0) {
      throw InvalidArgumentError("nonzero diagonal at index " +
                                 std::to_string(i));
    }
    for (std::int32_t j = i + 1; j < n; ++j) {
      const double w = couplings[static_cast<std::size_t>(i) * n + j];
      if (!std::isfinite(w)) throw InvalidArgumentError("non-finite coupling");
      if (w != couplings[static_cast<std::size_t>(j) * n + i]) {
        throw InvalidArgumentError("matrix not symmetric at (" +
                                   std::to_string(i) + ", " +
                                   std::to_string(j) + ")");
      }
      if (w != 0.0) edges.push_back({i, j, w});
    }
  }
  if (storage == Storage::kSparse ||
      (storage == Storage::kAuto &&
       static_cast<double>(edges.size()) <=
           kDenseThreshold * 0.5 * static_cast<double>(n) * (n - 1))) {
    return from_edges(n, std::move(edges), std::move(name), Storage::kSparse);
  }

  IsingProblem p;
  p.n_ = n;
  p.edge_count_ = static_cast<std::int64_t>(edges.size());
  p.name_ = std::move(name);
  p.dense_storage_ = true;
  p.dense_ = std::move(couplings);
  p.integer_weights_ = std::all_of(edges.begin(), edges.end(), [](const Edge& e) {
    return is_integer_weight(e.weight);
  });
  return p;
}

double IsingProblem::density() const {
  if (n_ < 2) return 0.0;
  return static_cast<double>(edge_count_) /
         (0.5 * static_cast<double>(n_) * (n_ - 1));
}

double IsingProblem::coupling(std::int32_t i, std::int32_t j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) {
    throw InvalidArgumentError("coupling index out of range");
  }
  if (i == j) return 0.0;
  if (dense_storage_) return dense_[static_cast<std::size_t>(i) * n_ + j];
  const std::int64_t lo = row_ptr_[static_cast<std::size_t>(i)];
  const std::int64_t hi = row_ptr_[static_cast<std::size_t>(i) + 1];
  const auto begin = col_.begin() + lo;
  const auto end = col_.begin() + hi;
  const auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return 0.0;
  return val_[static_cast<std::size_t>(lo + (it - begin))];
}

// Dense row kernel: four interleaved partial sums (j mod 4), the tail
// folded into the first, combined as (a0 + a1) + (a2 + a3). This exact
// order is the determinism contract shared with multiply_lanes(); change
// both together or batched and single runs diverge in low-order bits.
void IsingProblem::multiply(std::span<const double> x,
                            std::span<double> out) const {
  check_dimension(n_, x.size(), "input vector");
  check_dimension(n_, out.size(), "output vector");

  if (dense_storage_) {
    const std::int32_t n = n_;
    const std::int32_t limit = n - (n % 4);
    for (std::int32_t i = 0; i < n; ++i) {
      const double* row = dense_.data() + static_cast<std::size_t>(i) * n;
      double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
      std::int32_t j = 0;
      for (; j < limit; j += 4) {
        a0 += row[j] * x[static_cast<std::size_t>(j)];
        a1 += row[j + 1] * x[static_cast<std::size_t>(j) + 1];
        a2 += row[j + 2] * x[static_cast<std::size_t>(j) + 2];
        a3 += row[j + 3] * x[static_cast<std::size_t>(j) + 3];
      }
      for (; j < n; ++j) a0 += row[j] * x[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] = (a0 + a1) + (a2 + a3);
    }
  } else {
    for (std::int32_t i = 0; i < n_; ++i) {
      const std::int64_t lo = row_ptr_[static_cast<std::size_t>(i)];
      const std::int64_t hi = row_ptr_[static_cast<std::size_t>(i) + 1];
      double acc = 0.0;
      for (std::int64_t k = lo; k < hi; ++k) {
        acc += val_[static_cast<std::size_t>(k)] *
               x[static_cast<std::size_t>(col_[static_cast<std::size_t>(k)])];
      }
      out[static_cast<std::size_t>(i)] = acc;
    }
  }
}

void IsingProblem::multiply_lanes(const double* x, double* out) const {
  constexpr int L = kLaneWidth;
  if (dense_storage_) {
    const std::int32_t n = n_;
    const std::int32_t limit = n - (n % 4);
    for (std::int32_t i = 0; i < n; ++i) {
      const double* row = dense_.data() + static_cast<std::size_t>(i) * n;
      double a0[L] = {}, a1[L] = {}, a2[L] = {}, a3[L] = {};
      std::int32_t j = 0;
      for (; j < limit; j += 4) {
        const double w0 = row[j], w1 = row[j + 1];
        const double w2 = row[j + 2], w3 = row[j + 3];
        const double* x0 = x + static_cast<std::size_t>(j) * L;
        for (int l = 0; l < L; ++l) a0[l] += w0 * x0[l];
        for (int l = 0; l < L; ++l) a1[l] += w1 * x0[L + l];
        for (int l = 0; l < L; ++l) a2[l] += w2 * x0[2 * L + l];
        for (int l = 0; l < L; ++l) a3[l] += w3 * x0[3 * L + l];
      }
      for (; j < n; ++j) {
        const double w = row[j];
        const double* xj = x + static_cast<std::size_t>(j) * L;
        for (int l = 0; l < L; ++l) a0[l] += w * xj[l];
      }
      double* o = out + static_cast<std::size_t>(i) * L;
      for (int l = 0; l < L; ++l) o[l] = (a0[l] + a1[l]) + (a2[l] + a3[l]);
    }
  } else {
    for (std::int32_t i = 0; i < n_; ++i) {
      const std::int64_t lo = row_ptr_[static_cast<std::size_t>(i)];
      const std::int64_t hi = row_ptr_[static_cast<std::size_t>(i) + 1];
      double acc[L] = {};
      for (std::int64_t k = lo; k < hi; ++k) {
        const double w = val_[static_cast<std::size_t>(k)];
        const double* xj =
            x + static_cast<std::size_t>(col_[static_cast<std::size_t>(k)]) * L;
        for (int l = 0; l < L; ++l) acc[l] += w * xj[l];
      }
      double* o = out + static_cast<std::size_t>(i) * L;
      for (int l = 0; l < L; ++l) o[l] = acc[l];
    }
  }
}

double IsingProblem::infinity_norm() const {
  double best = 0.0;
  if (dense_storage_) {
    for (std::int32_t i = 0; i < n_; ++i) {
      const double* row = dense_.data() + static_cast<std::size_t>(i) * n_;
      double sum = 0.0;
      for (std::int32_t j = 0; j < n_; ++j) sum += std::abs(row[j]);
      best = std::max(best, sum);
    }
  } else {
    for (std::int32_t i = 0; i < n_; ++i) {
      double sum = 0.0;
      for (std::int64_t k = row_ptr_[static_cast<std::size_t>(i)];
           k < row_ptr_[static_cast<std::size_t>(i) + 1]; ++k) {
        sum += std::abs(val_[static_cast<std::size_t>(k)]);
      }
      best = std::max(best, sum);
    }
  }
  return best;
}

double energy(const IsingProblem& problem, const SpinConfig& config) {
  check_dimension(problem.size(), config.spins.size(), "spin configuration");
  // -(1/2) sum_{i,j} J ss = -sum_{i<j} J ss by symmetry.
  KahanSum acc;
  problem.for_each_edge([&](std::int32_t i, std::int32_t j, double w) {
    const double ss = static_cast<double>(config.spins[static_cast<std::size_t>(i)]) *
                      config.spins[static_cast<std::size_t>(j)];
    acc.add(w * ss);
  });
  return -acc.sum;
}

double cut_value(const IsingProblem& problem, const SpinConfig& config) {
  check_dimension(problem.size(), config.spins.size(), "spin configuration");
  KahanSum acc;
  problem.for_each_edge([&](std::int32_t i, std::int32_t j, double w) {
    if (config.spins[static_cast<std::size_t>(i)] !=
        config.spins[static_cast<std::size_t>(j)]) {
      acc.add(w);
    }
  });
  return -acc.sum;
}

double cut_offset(const IsingProblem& problem) {
  KahanSum acc;
  problem.for_each_edge(
      [&](std::int32_t, std::int32_t, double w) { acc.add(w); });
  return -0.5 * acc.sum;
}

SpinConfig spins_from_amplitudes(std::span<const double> x) {
  SpinConfig config;
  config.spins.reserve(x.size());
  for (double v : x) {
    if (std::isnan(v)) {
      throw InvalidArgumentError("NaN amplitude in spin readout");
    }
    config.spins.push_back(v >= 0.0 ? std::int8_t{1} : std::int8_t{-1});
  }
  return config;
}

IsingProblem generate_random(const GraphGenSpec& spec) {
  if (spec.n < 2) throw InvalidArgumentError("generated graph needs n >= 2");

  RngStream rng(spec.seed);
  std::vector<Edge> edges;
  const std::string tag = std::to_string(spec.seed);

  if (const auto* g = std::get_if<GaussianCouplings>(&spec.distribution)) {
    if (!(g->stddev > 0.0)) {
      throw InvalidArgumentError("gaussian stddev must be > 0");
    }
    edges.reserve(static_cast<std::size_t>(spec.n) * (spec.n - 1) / 2);
    for (std::int32_t i = 0; i < spec.n; ++i) {
      for (std::int32_t j = i + 1; j < spec.n; ++j) {
        edges.push_back({i, j, g->mean + g->stddev * rng.next_gaussian()});
      }
    }
    return IsingProblem::from_edges(
        spec.n, std::move(edges),
        "gaussian_n" + std::to_string(spec.n) + "_s" + tag, Storage::kAuto);
  }

  const auto& d = std::get<DiscreteCouplings>(spec.distribution);
  if (!(d.edge_probability > 0.0) || d.edge_probability > 1.0) {
    throw InvalidArgumentError("edge probability must be in (0, 1]");
  }
  for (std::int32_t i = 0; i < spec.n; ++i) {
    for (std::int32_t j = i + 1; j < spec.n; ++j) {
      if (rng.next_double() < d.edge_probability) {
        edges.push_back({i, j, rng.next_double() < 0.5 ? 1.0 : -1.0});
      }
    }
  }
  return IsingProblem::from_edges(
      spec.n, std::move(edges),
      "discrete_n" + std::to_string(spec.n) + "_s" + tag, Storage::kAuto);
}

}  // namespace simcim
