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

#include "simcim.h"

#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "simcim/analysis.hpp"
#include "simcim/batch.hpp"
#include "simcim/cim_solver.hpp"
#include "simcim/errors.hpp"
#include "simcim/gset.hpp"
#include "simcim/ising_problem.hpp"
#include "simcim/nmfa_solver.hpp"
#include "simcim/simcim_solver.hpp"
#include "simcim/trace.hpp"

// Opaque handle definitions. The batch handle keeps the two problem
// facts (n, integer weights) that its accessors need after the problem
// itself may have been freed.
struct simcim_problem {
  simcim::IsingProblem impl;
};

struct simcim_batch_result {
  simcim::RunBatchResult impl;
  std::vector<double> cuts;  // cached per-run cuts for stats/histograms
  int32_t n = 0;
  bool integer_weights = false;
};

struct simcim_trace {
  simcim::SolverTrace impl;
};

namespace {

thread_local std::string g_last_error;

simcim_status fail(simcim_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs fn inside the library's exception-to-status translation.
template <typename Fn>
simcim_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const simcim::ParseError& e) {
    return fail(SIMCIM_ERR_PARSE, e.what());
  } catch (const simcim::DivergenceError& e) {
    return fail(SIMCIM_ERR_DIVERGENCE, e.what());
  } catch (const simcim::IoError& e) {
    return fail(SIMCIM_ERR_IO, e.what());
  } catch (const simcim::InvalidArgumentError& e) {
    return fail(SIMCIM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SIMCIM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SIMCIM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SIMCIM_ERR_INTERNAL, "unknown error");
  }
}

simcim_status require(bool ok, const char* message) {
  return ok ? SIMCIM_OK : fail(SIMCIM_ERR_INVALID_ARGUMENT, message);
}

simcim_status wrap_problem(simcim::IsingProblem&& problem,
                           simcim_problem** out) {
  *out = new simcim_problem{std::move(problem)};
  return SIMCIM_OK;
}

simcim::SpinConfig to_config(const int8_t* spins, int32_t n) {
  simcim::SpinConfig config;
  config.spins.reserve(static_cast<std::size_t>(n));
  for (int32_t i = 0; i < n; ++i) {
    if (spins[i] != 1 && spins[i] != -1) {
      throw simcim::InvalidArgumentError("spins must be +1 or -1");
    }
    config.spins.push_back(spins[i]);
  }
  return config;
}

simcim::SimCimParams to_simcim_params(const simcim_solver_config& c) {
  simcim::SimCimParams p;
  p.iterations = c.iterations;
  if (c.zeta > 0.0) p.zeta = c.zeta;
  p.zeta_auto_scale = c.zeta_auto_scale;
  p.noise_amplitude = c.noise_amplitude;
  p.x_sat = c.x_sat;
  p.momentum_beta = c.momentum_beta;
  p.v_start = c.v_start;
  p.v_end = c.v_end;
  p.steepness = c.steepness;
  return p;
}

simcim::NmfaParams to_nmfa_params(const simcim_solver_config& c) {
  simcim::NmfaParams p;
  p.iterations = c.iterations;
  if (c.zeta > 0.0) p.zeta = c.zeta;
  p.zeta_auto_scale = c.zeta_auto_scale;
  p.noise_amplitude = c.noise_amplitude;
  p.alpha = c.alpha;
  p.use_schedule = c.nmfa_use_schedule != 0;
  p.s_start = c.nmfa_s_start;
  p.s_end = c.nmfa_s_end;
  p.steepness = c.steepness;
  return p;
}

simcim::CimPhysicsParams to_cim_params(const simcim_solver_config& c) {
  simcim::CimPhysicsParams p;
  p.iterations = c.iterations;
  if (c.zeta > 0.0) p.zeta = c.zeta;
  p.zeta_auto_scale = c.zeta_auto_scale;
  p.noise_amplitude = c.noise_amplitude;
  p.w = c.cim_w;
  p.gamma = c.cim_gamma;
  p.s = c.cim_s;
  return p;
}

simcim_status wrap_batch(const simcim_problem* problem,
                         simcim::RunBatchResult&& batch,
                         simcim_batch_result** out) {
  auto* handle = new simcim_batch_result;
  handle->impl = std::move(batch);
  handle->cuts.reserve(handle->impl.runs.size());
  for (const auto& run : handle->impl.runs) handle->cuts.push_back(run.cut);
  handle->n = problem->impl.size();
  handle->integer_weights = problem->impl.integer_weights();
  *out = handle;
  return SIMCIM_OK;
}

simcim_status check_run_index(const simcim_batch_result* result, int32_t run) {
  return require(result != nullptr && run >= 0 &&
                     run < static_cast<int32_t>(result->impl.runs.size()),
                 "run index out of range");
}

}  // namespace

extern "C" {

const char* simcim_version(void) { return "1.0.0"; }

const char* simcim_last_error(void) { return g_last_error.c_str(); }

simcim_status simcim_problem_load_gset(const char* path,
                                       simcim_problem** out) {
  if (simcim_status s = require(path && out, "path and out must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    return wrap_problem(simcim::load_gset_file(path), out);
  });
}

simcim_status simcim_problem_parse_gset(const char* text, const char* name,
                                        simcim_problem** out) {
  if (simcim_status s = require(text && out, "text and out must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    std::istringstream in{std::string(text)};
    return wrap_problem(
        simcim::parse_gset(in, name != nullptr ? name : "unnamed"), out);
  });
}

simcim_status simcim_problem_save_gset(const simcim_problem* problem,
                                       const char* path) {
  if (simcim_status s =
          require(problem && path, "problem and path must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    simcim::save_gset_file(problem->impl, path);
    return SIMCIM_OK;
  });
}

simcim_status simcim_problem_from_edges(int32_t n, const int32_t* edge_i,
                                        const int32_t* edge_j,
                                        const double* weight, int64_t m,
                                        const char* name,
                                        simcim_problem** out) {
  if (simcim_status s =
          require(out && (m == 0 || (edge_i && edge_j && weight)),
                  "edge arrays must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  if (simcim_status s = require(m >= 0, "edge count must be >= 0");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    std::vector<simcim::Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int64_t k = 0; k < m; ++k) {
      edges.push_back({edge_i[k], edge_j[k], weight[k]});
    }
    return wrap_problem(
        simcim::IsingProblem::from_edges(
            n, std::move(edges), name != nullptr ? name : "unnamed"),
        out);
  });
}

simcim_status simcim_problem_generate_gaussian(int32_t n, double mean,
                                               double stddev, uint64_t seed,
                                               simcim_problem** out) {
  if (simcim_status s = require(out != nullptr, "out must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    simcim::GraphGenSpec spec;
    spec.n = n;
    spec.distribution = simcim::GaussianCouplings{mean, stddev};
    spec.seed = seed;
    return wrap_problem(simcim::generate_random(spec), out);
  });
}

simcim_status simcim_problem_generate_discrete(int32_t n,
                                               double edge_probability,
                                               uint64_t seed,
                                               simcim_problem** out) {
  if (simcim_status s = require(out != nullptr, "out must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    simcim::GraphGenSpec spec;
    spec.n = n;
    spec.distribution = simcim::DiscreteCouplings{edge_probability};
    spec.seed = seed;
    return wrap_problem(simcim::generate_random(spec), out);
  });
}

void simcim_problem_free(simcim_problem* problem) { delete problem; }

int32_t simcim_problem_size(const simcim_problem* problem) {
  return problem != nullptr ? problem->impl.size() : 0;
}

int64_t simcim_problem_edge_count(const simcim_problem* problem) {
  return problem != nullptr ? problem->impl.edge_count() : 0;
}

int simcim_problem_is_dense(const simcim_problem* problem) {
  return problem != nullptr && problem->impl.dense() ? 1 : 0;
}

int simcim_problem_integer_weights(const simcim_problem* problem) {
  return problem != nullptr && problem->impl.integer_weights() ? 1 : 0;
}

const char* simcim_problem_name(const simcim_problem* problem) {
  return problem != nullptr ? problem->impl.name().c_str() : "";
}

simcim_status simcim_energy(const simcim_problem* problem, const int8_t* spins,
                            int32_t n, double* out) {
  if (simcim_status s =
          require(problem && spins && out, "arguments must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    *out = simcim::energy(problem->impl, to_config(spins, n));
    return SIMCIM_OK;
  });
}

simcim_status simcim_cut_value(const simcim_problem* problem,
                               const int8_t* spins, int32_t n, double* out) {
  if (simcim_status s =
          require(problem && spins && out, "arguments must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    *out = simcim::cut_value(problem->impl, to_config(spins, n));
    return SIMCIM_OK;
  });
}

simcim_status simcim_solver_config_init(simcim_solver_kind kind,
                                        simcim_solver_config* config) {
  if (simcim_status s = require(config != nullptr, "config must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  if (kind != SIMCIM_SOLVER_SIMCIM && kind != SIMCIM_SOLVER_NMFA &&
      kind != SIMCIM_SOLVER_CIM_PHYSICS) {
    return fail(SIMCIM_ERR_INVALID_ARGUMENT, "unknown solver kind");
  }
  // Defaults come from the C++ parameter structs, the single source of
  // truth for tuned values. zeta = 0 encodes the auto rule.
  const simcim::SimCimParams sp;
  const simcim::NmfaParams np;
  const simcim::CimPhysicsParams cp;

  simcim_solver_config c;
  std::memset(&c, 0, sizeof c);
  c.kind = kind;
  c.iterations = 1000;
  c.zeta = 0.0;
  c.x_sat = sp.x_sat;
  c.momentum_beta = sp.momentum_beta;
  c.v_start = sp.v_start;
  c.v_end = sp.v_end;
  c.alpha = np.alpha;
  c.nmfa_use_schedule = np.use_schedule ? 1 : 0;
  c.nmfa_s_start = np.s_start;
  c.nmfa_s_end = np.s_end;
  c.cim_w = cp.w;
  c.cim_gamma = cp.gamma;
  c.cim_s = cp.s;
  switch (kind) {
    case SIMCIM_SOLVER_SIMCIM:
      c.zeta_auto_scale = sp.zeta_auto_scale;
      c.noise_amplitude = sp.noise_amplitude;
      c.steepness = sp.steepness;
      break;
    case SIMCIM_SOLVER_NMFA:
      c.zeta_auto_scale = np.zeta_auto_scale;
      c.noise_amplitude = np.noise_amplitude;
      c.steepness = np.steepness;
      break;
    case SIMCIM_SOLVER_CIM_PHYSICS:
      c.zeta_auto_scale = cp.zeta_auto_scale;
      c.noise_amplitude = cp.noise_amplitude;
      c.steepness = sp.steepness;
      break;
  }
  *config = c;
  return SIMCIM_OK;
}

simcim_status simcim_run_batch(const simcim_problem* problem,
                               const simcim_solver_config* config,
                               int32_t runs, uint64_t master_seed,
                               int32_t threads, simcim_batch_result** out) {
  if (simcim_status s = require(problem && config && out,
                                "problem, config and out must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    simcim::BatchOptions options;
    options.runs = runs;
    options.master_seed = master_seed;
    options.threads = threads;
    simcim::RunBatchResult batch;
    switch (config->kind) {
      case SIMCIM_SOLVER_SIMCIM:
        batch = simcim::run_simcim_batch(problem->impl,
                                         to_simcim_params(*config), options);
        break;
      case SIMCIM_SOLVER_NMFA:
        batch = simcim::run_nmfa_batch(problem->impl, to_nmfa_params(*config),
                                       options);
        break;
      case SIMCIM_SOLVER_CIM_PHYSICS:
        batch = simcim::run_cim_batch(problem->impl, to_cim_params(*config),
                                      options);
        break;
      default:
        throw simcim::InvalidArgumentError("unknown solver kind");
    }
    return wrap_batch(problem, std::move(batch), out);
  });
}

void simcim_batch_result_free(simcim_batch_result* result) { delete result; }

int32_t simcim_batch_run_count(const simcim_batch_result* result) {
  return result != nullptr ? static_cast<int32_t>(result->impl.runs.size())
                           : 0;
}

int32_t simcim_batch_best_run(const simcim_batch_result* result) {
  return result != nullptr ? result->impl.best_run : -1;
}

double simcim_batch_effective_zeta(const simcim_batch_result* result) {
  return result != nullptr ? result->impl.effective_zeta : 0.0;
}

double simcim_batch_total_millis(const simcim_batch_result* result) {
  return result != nullptr ? result->impl.total_millis : 0.0;
}

simcim_status simcim_batch_cut(const simcim_batch_result* result, int32_t run,
                               double* out) {
  if (simcim_status s = check_run_index(result, run); s != SIMCIM_OK) return s;
  if (simcim_status s = require(out != nullptr, "out must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  *out = result->impl.runs[static_cast<std::size_t>(run)].cut;
  return SIMCIM_OK;
}

simcim_status simcim_batch_energy(const simcim_batch_result* result,
                                  int32_t run, double* out) {
  if (simcim_status s = check_run_index(result, run); s != SIMCIM_OK) return s;
  if (simcim_status s = require(out != nullptr, "out must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  *out = result->impl.runs[static_cast<std::size_t>(run)].energy;
  return SIMCIM_OK;
}

simcim_status simcim_batch_seed(const simcim_batch_result* result, int32_t run,
                                uint64_t* out) {
  if (simcim_status s = check_run_index(result, run); s != SIMCIM_OK) return s;
  if (simcim_status s = require(out != nullptr, "out must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  *out = result->impl.runs[static_cast<std::size_t>(run)].seed;
  return SIMCIM_OK;
}

simcim_status simcim_batch_millis(const simcim_batch_result* result,
                                  int32_t run, double* out) {
  if (simcim_status s = check_run_index(result, run); s != SIMCIM_OK) return s;
  if (simcim_status s = require(out != nullptr, "out must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  *out = result->impl.runs[static_cast<std::size_t>(run)].millis;
  return SIMCIM_OK;
}

simcim_status simcim_batch_spins(const simcim_batch_result* result,
                                 int32_t run, int8_t* spins, int32_t n) {
  if (simcim_status s = check_run_index(result, run); s != SIMCIM_OK) return s;
  if (simcim_status s = require(spins != nullptr, "spins must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  if (simcim_status s =
          require(n == result->n, "buffer size must equal problem size");
      s != SIMCIM_OK) {
    return s;
  }
  const auto& config = result->impl.runs[static_cast<std::size_t>(run)].spins;
  std::memcpy(spins, config.spins.data(), static_cast<std::size_t>(n));
  return SIMCIM_OK;
}

simcim_status simcim_batch_cut_stats(const simcim_batch_result* result,
                                     double* min, double* max, double* mean,
                                     double* stddev) {
  if (simcim_status s = require(result != nullptr, "result must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    const simcim::Stats stats = simcim::compute_stats(result->cuts);
    if (min != nullptr) *min = stats.min;
    if (max != nullptr) *max = stats.max;
    if (mean != nullptr) *mean = stats.mean;
    if (stddev != nullptr) *stddev = stats.stddev;
    return SIMCIM_OK;
  });
}

simcim_status simcim_batch_cut_histogram(const simcim_batch_result* result,
                                         double bin_width, double* first_edge,
                                         double* actual_width, int64_t* counts,
                                         int32_t* n_bins) {
  if (simcim_status s = require(result && n_bins,
                                "result and n_bins must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    const double width =
        bin_width > 0.0
            ? bin_width
            : simcim::auto_bin_width(result->cuts, result->integer_weights);
    const simcim::Histogram h = simcim::build_histogram(result->cuts, width);
    const int32_t needed = static_cast<int32_t>(h.counts.size());
    if (counts != nullptr) {
      if (*n_bins < needed) {
        throw simcim::InvalidArgumentError("counts buffer too small");
      }
      std::memcpy(counts, h.counts.data(),
                  static_cast<std::size_t>(needed) * sizeof(int64_t));
    }
    *n_bins = needed;
    if (first_edge != nullptr) *first_edge = h.first_edge;
    if (actual_width != nullptr) *actual_width = h.bin_width;
    return SIMCIM_OK;
  });
}

simcim_status simcim_run_single(const simcim_problem* problem,
                                const simcim_solver_config* config,
                                uint64_t seed, int32_t trace_stride,
                                int32_t max_tracked_spins,
                                simcim_trace** trace_out,
                                simcim_batch_result** out) {
  if (simcim_status s = require(problem && config && out,
                                "problem, config and out must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    simcim::TraceRequest request;
    request.stride = trace_stride;
    request.max_tracked_spins = max_tracked_spins;
    const simcim::TraceRequest* request_ptr =
        trace_out != nullptr ? &request : nullptr;
    simcim::SolverTrace trace;
    simcim::SolverTrace* trace_ptr = trace_out != nullptr ? &trace : nullptr;

    simcim::RunResult run;
    double zeta = 0.0;
    switch (config->kind) {
      case SIMCIM_SOLVER_SIMCIM: {
        const auto params = to_simcim_params(*config);
        zeta = simcim::resolve_zeta(problem->impl, params);
        run = simcim::run_simcim(problem->impl, params, seed, request_ptr,
                                 trace_ptr);
        break;
      }
      case SIMCIM_SOLVER_NMFA: {
        const auto params = to_nmfa_params(*config);
        zeta = simcim::resolve_zeta(problem->impl, params);
        run = simcim::run_nmfa(problem->impl, params, seed, request_ptr,
                               trace_ptr);
        break;
      }
      case SIMCIM_SOLVER_CIM_PHYSICS: {
        const auto params = to_cim_params(*config);
        zeta = simcim::resolve_zeta(problem->impl, params);
        run = simcim::run_cim(problem->impl, params, seed, request_ptr,
                              trace_ptr);
        break;
      }
      default:
        throw simcim::InvalidArgumentError("unknown solver kind");
    }

    simcim::RunBatchResult batch;
    batch.total_millis = run.millis;
    batch.effective_zeta = zeta;
    batch.runs.push_back(std::move(run));
    batch.best_run = 0;

    simcim_batch_result* wrapped = nullptr;
    wrap_batch(problem, std::move(batch), &wrapped);
    if (trace_out != nullptr) {
      *trace_out = new simcim_trace{std::move(trace)};
    }
    *out = wrapped;
    return SIMCIM_OK;
  });
}

void simcim_trace_free(simcim_trace* trace) { delete trace; }

int32_t simcim_trace_record_count(const simcim_trace* trace) {
  return trace != nullptr ? static_cast<int32_t>(trace->impl.records.size())
                          : 0;
}

int32_t simcim_trace_amplitude_count(const simcim_trace* trace) {
  if (trace == nullptr || trace->impl.records.empty()) return 0;
  return static_cast<int32_t>(trace->impl.records.front().amplitudes.size());
}

simcim_status simcim_trace_record(const simcim_trace* trace, int32_t index,
                                  int32_t* iteration, double* pump,
                                  double* eig_proximity, double* amplitudes) {
  if (simcim_status s =
          require(trace != nullptr && index >= 0 &&
                      index < static_cast<int32_t>(trace->impl.records.size()),
                  "trace record index out of range");
      s != SIMCIM_OK) {
    return s;
  }
  const simcim::TraceRecord& rec =
      trace->impl.records[static_cast<std::size_t>(index)];
  if (iteration != nullptr) *iteration = rec.iteration;
  if (pump != nullptr) *pump = rec.pump;
  if (eig_proximity != nullptr) *eig_proximity = rec.eig_proximity;
  if (amplitudes != nullptr) {
    std::memcpy(amplitudes, rec.amplitudes.data(),
                rec.amplitudes.size() * sizeof(double));
  }
  return SIMCIM_OK;
}

simcim_status simcim_power_iteration(const simcim_problem* problem, double tol,
                                     int32_t max_iter, uint64_t seed,
                                     double* lambda_max, double* residual,
                                     int32_t* iterations_used, int* converged,
                                     int* zero_matrix) {
  if (simcim_status s = require(problem != nullptr, "problem must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    const simcim::SpectralInfo info =
        simcim::power_iteration(problem->impl, tol, max_iter, seed);
    if (lambda_max != nullptr) *lambda_max = info.lambda_max;
    if (residual != nullptr) *residual = info.residual;
    if (iterations_used != nullptr) *iterations_used = info.iterations_used;
    if (converged != nullptr) *converged = info.converged ? 1 : 0;
    if (zero_matrix != nullptr) *zero_matrix = info.zero_matrix ? 1 : 0;
    return SIMCIM_OK;
  });
}

simcim_status simcim_eig_proximity(const simcim_problem* problem,
                                   const double* x, int32_t n, double* out) {
  if (simcim_status s =
          require(problem && x && out, "arguments must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  if (simcim_status s = require(n >= 0, "n must be >= 0"); s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    *out = simcim::eig_proximity(
        problem->impl, std::span<const double>(x, static_cast<std::size_t>(n)));
    return SIMCIM_OK;
  });
}

simcim_status simcim_brute_force(const simcim_problem* problem, int8_t* spins,
                                 double* max_cut, double* min_energy) {
  if (simcim_status s = require(problem != nullptr, "problem must be non-null");
      s != SIMCIM_OK) {
    return s;
  }
  return guarded([&] {
    const simcim::BruteForceResult result =
        simcim::brute_force_optimum(problem->impl);
    if (spins != nullptr) {
      std::memcpy(spins, result.best_config.spins.data(),
                  result.best_config.spins.size());
    }
    if (max_cut != nullptr) *max_cut = result.max_cut;
    if (min_energy != nullptr) *min_energy = result.min_energy;
    return SIMCIM_OK;
  });
}

}  // extern "C"
