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

#ifndef SIMCIM_SRC_INTERNAL_HPP
#define SIMCIM_SRC_INTERNAL_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <utility>

#include "simcim/analysis.hpp"
#include "simcim/ising_problem.hpp"
#include "simcim/trace.hpp"

namespace simcim::detail {

// Fixed seed for the power iteration behind the zeta auto rule. Must not
// depend on the batch master seed: the resolved zeta is part of the
// parameter set, not of any run's random stream.
inline constexpr std::uint64_t kZetaProbeSeed = 0x5ca1ab1e;

// zeta = scale / lambda_max; plain scale when the spectrum gives no
// positive scale reference (only the zero matrix, for symmetric
// zero-diagonal J).
inline double resolve_auto_zeta(const IsingProblem& problem, double scale) {
  const SpectralInfo info = power_iteration(problem, 1e-6, 500, kZetaProbeSeed);
  if (info.zero_matrix || info.lambda_max <= 0.0) return scale;
  return scale / info.lambda_max;
}

// ||x/||x|| - y/||y|||| without forming the normalized vectors:
// sqrt(2 - 2 <x,y> / (||x|| ||y||)), clamped into [0, 2] against rounding.
// NaN when either vector is zero (callers decide whether that throws).
inline double proximity_from_vectors(std::span<const double> x,
                                     std::span<const double> y) {
  double xx = 0.0, yy = 0.0, xy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xx += x[i] * x[i];
    yy += y[i] * y[i];
    xy += x[i] * y[i];
  }
  if (xx == 0.0 || yy == 0.0) return std::nan("");
  double c = xy / (std::sqrt(xx) * std::sqrt(yy));
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::sqrt(2.0 - 2.0 * c);
}

// Snapshot of the state before iteration t, reusing the coupling vector
// the step is about to consume; proximity is NaN while x == 0.
inline void append_trace_record(SolverTrace* trace, const TraceRequest* request,
                                std::int32_t t, double pump,
                                std::span<const double> x,
                                std::span<const double> coupling) {
  if (!trace || !request) return;
  const std::int32_t stride = std::max(request->stride, 1);
  if (t % stride != 0) return;
  TraceRecord rec;
  rec.iteration = t;
  rec.pump = pump;
  rec.eig_proximity = proximity_from_vectors(x, coupling);
  const std::size_t keep = std::min<std::size_t>(
      x.size(),
      static_cast<std::size_t>(std::max(request->max_tracked_spins, 0)));
  rec.amplitudes.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(keep));
  trace->records.push_back(std::move(rec));
}

}  // namespace simcim::detail

#endif  // SIMCIM_SRC_INTERNAL_HPP
