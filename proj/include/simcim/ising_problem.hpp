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

#ifndef SIMCIM_ISING_PROBLEM_HPP
#define SIMCIM_ISING_PROBLEM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace simcim {

// Number of solver runs advanced in lockstep by the batched coupling
// kernel. Fixed at compile time so that results never depend on the
// thread count or on how runs are grouped into blocks.
inline constexpr int kLaneWidth = 8;

enum class Storage : std::uint8_t {
  kAuto,    // pick by density threshold
  kDense,   // row-major n*n matrix
  kSparse,  // edge list + CSR adjacency
};

// Edges denser than this fraction of all pairs get the dense layout;
// matvec cost dominates the solvers' runtime on complete graphs.
inline constexpr double kDenseThreshold = 0.10;

// One coupled pair, canonicalized to i < j (0-based).
struct Edge {
  std::int32_t i = 0;
  std::int32_t j = 0;
  double weight = 0.0;
};

// A configuration of n spins, each exactly +1 or -1.
struct SpinConfig {
  std::vector<std::int8_t> spins;

  std::int32_t size() const { return static_cast<std::int32_t>(spins.size()); }
  SpinConfig flipped() const {
    SpinConfig out = *this;
    for (auto& s : out.spins) s = static_cast<std::int8_t>(-s);
    return out;
  }
  bool operator==(const SpinConfig&) const = default;
};

struct GaussianCouplings {
  double mean = 0.0;
  double stddev = 1.0;  // must be > 0
};

struct DiscreteCouplings {
  double edge_probability = 1.0;  // in (0, 1]; weights are +/-1
};

struct GraphGenSpec {
  std::int32_t n = 0;
  std::variant<GaussianCouplings, DiscreteCouplings> distribution =
      GaussianCouplings{};
  std::uint64_t seed = 0;
};

// Symmetric zero-diagonal coupling matrix J with instance metadata.
// Immutable after construction; evaluation is pure, so one instance can
// be shared by any number of concurrent solver runs.
class IsingProblem {
 public:
  // Builds from unordered pairs. Duplicate pairs, self-loops, out-of-range
  // indices and non-finite weights are rejected.
  static IsingProblem from_edges(std::int32_t n, std::vector<Edge> edges,
                                 std::string name,
                                 Storage storage = Storage::kAuto);

  // Builds from a full row-major matrix. The matrix must be exactly
  // symmetric with an identically zero diagonal.
  static IsingProblem from_dense(std::int32_t n, std::vector<double> couplings,
                                 std::string name,
                                 Storage storage = Storage::kDense);

  std::int32_t size() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }
  bool dense() const { return dense_storage_; }
  bool integer_weights() const { return integer_weights_; }
  const std::string& name() const { return name_; }

  // Fraction of coupled pairs among all n(n-1)/2 pairs.
  double density() const;

  double coupling(std::int32_t i, std::int32_t j) const;

  // Visits every coupled pair once in canonical (i, j), i < j order.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    if (dense_storage_) {
      for (std::int32_t i = 0; i < n_; ++i) {
        const double* row = dense_.data() + static_cast<std::size_t>(i) * n_;
        for (std::int32_t j = i + 1; j < n_; ++j) {
          if (row[j] != 0.0) fn(i, j, row[j]);
        }
      }
    } else {
      for (const Edge& e : edges_) fn(e.i, e.j, e.weight);
    }
  }

  // out = J x. The accumulation order per output element is fixed (see
  // the kernel comments), so results are reproducible bit for bit.
  void multiply(std::span<const double> x, std::span<double> out) const;

  // Lane-blocked matvec: x and out hold kLaneWidth interleaved state
  // vectors (layout x[j * kLaneWidth + lane]). Each lane's accumulation
  // order equals multiply()'s, so a run gives identical results whether
  // it executes alone or inside a lane block.
  void multiply_lanes(const double* x, double* out) const;

  // Largest absolute row sum; upper bound on the spectral radius.
  double infinity_norm() const;

 private:
  IsingProblem() = default;

  std::int32_t n_ = 0;
  std::int64_t edge_count_ = 0;
  bool dense_storage_ = false;
  bool integer_weights_ = true;
  std::string name_;

  std::vector<double> dense_;  // n*n row-major when dense

  // Sparse: canonical edge list plus a CSR view storing both directions
  // of every pair for the matvec.
  std::vector<Edge> edges_;
  std::vector<std::int64_t> row_ptr_;
  std::vector<std::int32_t> col_;
  std::vector<double> val_;
};

// Ising energy H = -(1/2) sum_{i,j} J_ij s_i s_j (full double sum).
double energy(const IsingProblem& problem, const SpinConfig& config);

// Cut value -(1/2) sum_{i<j} J_ij (1 - s_i s_j). With the GSet weight
// convention J = -w this is the weight of the cut edges, and the identity
// cut = C - H/2 with C = -(1/2) sum_{i<j} J_ij ties it to energy().
double cut_value(const IsingProblem& problem, const SpinConfig& config);

// Constant C = -(1/2) sum_{i<j} J_ij of the cut-energy identity.
double cut_offset(const IsingProblem& problem);

// Sign readout: s_i = +1 if x_i >= 0 else -1. Zero maps to +1 (a fixed
// tie-break; the event has measure zero under noise). NaN is rejected.
SpinConfig spins_from_amplitudes(std::span<const double> x);

// Fully connected (gaussian) or Bernoulli-thinned (discrete +/-1) random
// instance; deterministic in spec.seed. Requires n >= 2.
IsingProblem generate_random(const GraphGenSpec& spec);

}  // namespace simcim

#endif  // SIMCIM_ISING_PROBLEM_HPP
