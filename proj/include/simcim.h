/* Copyright 2026 simcim developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the simcim solver library.
 *
 * All functions that can fail return a simcim_status; on failure a
 * human-readable message is available from simcim_last_error() until the
 * next failing call on the same thread. Objects returned through **out
 * parameters are owned by the caller and released with the matching
 * _free function. Out parameters are written only on SIMCIM_OK.
 */

#ifndef SIMCIM_H
#define SIMCIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum simcim_status {
  SIMCIM_OK = 0,
  SIMCIM_ERR_INVALID_ARGUMENT = 1,
  SIMCIM_ERR_PARSE = 2,
  SIMCIM_ERR_DIVERGENCE = 3,
  SIMCIM_ERR_IO = 4,
  SIMCIM_ERR_INTERNAL = 5
} simcim_status;

/* Library semantic version, e.g. "1.0.0". */
const char* simcim_version(void);

/* Message for the most recent failure on the calling thread ("" if none). */
const char* simcim_last_error(void);

/* ---- problem instances -------------------------------------------- */

typedef struct simcim_problem simcim_problem;

/* GSet text format: header "n m", then m lines "i j w" with 1-based
 * endpoints; '#' comment lines allowed. Weight w maps to coupling -w. */
simcim_status simcim_problem_load_gset(const char* path,
                                       simcim_problem** out);
simcim_status simcim_problem_parse_gset(const char* text, const char* name,
                                        simcim_problem** out);
simcim_status simcim_problem_save_gset(const simcim_problem* problem,
                                       const char* path);

/* Couplings given directly: m unordered pairs (i, j) with 0-based
 * endpoints and weights w interpreted as J entries (no sign flip). */
simcim_status simcim_problem_from_edges(int32_t n, const int32_t* edge_i,
                                        const int32_t* edge_j,
                                        const double* weight, int64_t m,
                                        const char* name,
                                        simcim_problem** out);

/* Complete graph, couplings i.i.d. Gaussian(mean, stddev^2). */
simcim_status simcim_problem_generate_gaussian(int32_t n, double mean,
                                               double stddev, uint64_t seed,
                                               simcim_problem** out);

/* Couplings +1/-1 on edges kept with the given probability. */
simcim_status simcim_problem_generate_discrete(int32_t n,
                                               double edge_probability,
                                               uint64_t seed,
                                               simcim_problem** out);

void simcim_problem_free(simcim_problem* problem);

int32_t simcim_problem_size(const simcim_problem* problem);
int64_t simcim_problem_edge_count(const simcim_problem* problem);
int simcim_problem_is_dense(const simcim_problem* problem);
int simcim_problem_integer_weights(const simcim_problem* problem);
const char* simcim_problem_name(const simcim_problem* problem);

/* spins: n entries, each +1 or -1. */
simcim_status simcim_energy(const simcim_problem* problem,
                            const int8_t* spins, int32_t n, double* out);
simcim_status simcim_cut_value(const simcim_problem* problem,
                               const int8_t* spins, int32_t n, double* out);

/* ---- solver configuration ----------------------------------------- */

typedef enum simcim_solver_kind {
  SIMCIM_SOLVER_SIMCIM = 0,
  SIMCIM_SOLVER_NMFA = 1,
  SIMCIM_SOLVER_CIM_PHYSICS = 2
} simcim_solver_kind;

/* Flat parameter block covering all three solvers; fields not used by
 * the selected kind are ignored. zeta <= 0 requests the auto rule
 * zeta = zeta_auto_scale / lambda_max. */
typedef struct simcim_solver_config {
  simcim_solver_kind kind;
  int32_t iterations;
  double zeta;
  double zeta_auto_scale;
  double noise_amplitude;

  /* simcim */
  double x_sat;
  double momentum_beta;
  double v_start;
  double v_end;
  double steepness; /* pump ramp; doubles as the nmfa schedule steepness */

  /* nmfa */
  double alpha;
  int nmfa_use_schedule;
  double nmfa_s_start;
  double nmfa_s_end;

  /* cim_physics */
  double cim_w;
  double cim_gamma;
  double cim_s;
} simcim_solver_config;

/* Fills the tuned defaults for the given solver kind. */
simcim_status simcim_solver_config_init(simcim_solver_kind kind,
                                        simcim_solver_config* config);

/* ---- batches of annealing runs ------------------------------------ */

typedef struct simcim_batch_result simcim_batch_result;

/* Executes `runs` independent runs. Run r uses an RNG stream derived
 * from (master_seed, r); results are bit-identical for any `threads`
 * value (<= 0 selects the hardware thread count). */
simcim_status simcim_run_batch(const simcim_problem* problem,
                               const simcim_solver_config* config,
                               int32_t runs, uint64_t master_seed,
                               int32_t threads, simcim_batch_result** out);

void simcim_batch_result_free(simcim_batch_result* result);

int32_t simcim_batch_run_count(const simcim_batch_result* result);
/* Index of the lowest-energy (equivalently max-cut) run. */
int32_t simcim_batch_best_run(const simcim_batch_result* result);
double simcim_batch_effective_zeta(const simcim_batch_result* result);
double simcim_batch_total_millis(const simcim_batch_result* result);

simcim_status simcim_batch_cut(const simcim_batch_result* result, int32_t run,
                               double* out);
simcim_status simcim_batch_energy(const simcim_batch_result* result,
                                  int32_t run, double* out);
simcim_status simcim_batch_seed(const simcim_batch_result* result, int32_t run,
                                uint64_t* out);
simcim_status simcim_batch_millis(const simcim_batch_result* result,
                                  int32_t run, double* out);
/* Copies the run's n spins into the caller's buffer. */
simcim_status simcim_batch_spins(const simcim_batch_result* result,
                                 int32_t run, int8_t* spins, int32_t n);

/* Aggregates over per-run cut values (stddev is the population form). */
simcim_status simcim_batch_cut_stats(const simcim_batch_result* result,
                                     double* min, double* max, double* mean,
                                     double* stddev);

/* Histogram of cut values. bin_width <= 0 selects the automatic width
 * (1 for integer-weight instances, Freedman-Diaconis otherwise). Two-call
 * pattern: pass counts = NULL to query the bin count, then call again
 * with a buffer of at least *n_bins entries. Bins are aligned to integer
 * multiples of the width starting at *first_edge. */
simcim_status simcim_batch_cut_histogram(const simcim_batch_result* result,
                                         double bin_width, double* first_edge,
                                         double* actual_width,
                                         int64_t* counts, int32_t* n_bins);

/* ---- single traced run -------------------------------------------- */

typedef struct simcim_trace simcim_trace;

/* One run with optional tracing: every stride-th iteration records the
 * pump value, the eigenvector-proximity diagnostic and the first
 * max_tracked_spins amplitudes, snapshotted before the iteration runs.
 * The run is returned as a 1-run batch. trace_out may be NULL. */
simcim_status simcim_run_single(const simcim_problem* problem,
                                const simcim_solver_config* config,
                                uint64_t seed, int32_t trace_stride,
                                int32_t max_tracked_spins,
                                simcim_trace** trace_out,
                                simcim_batch_result** out);

void simcim_trace_free(simcim_trace* trace);

int32_t simcim_trace_record_count(const simcim_trace* trace);
/* Amplitudes stored per record (min(max_tracked_spins, n)). */
int32_t simcim_trace_amplitude_count(const simcim_trace* trace);
/* eig_proximity is NaN while the state is still identically zero.
 * amplitudes may be NULL; otherwise it receives amplitude_count values. */
simcim_status simcim_trace_record(const simcim_trace* trace, int32_t index,
                                  int32_t* iteration, double* pump,
                                  double* eig_proximity, double* amplitudes);

/* ---- analysis ------------------------------------------------------ */

/* Largest algebraic eigenvalue of J by shifted power iteration. Any out
 * pointer may be NULL. zero_matrix reports the defined lambda = 0 case. */
simcim_status simcim_power_iteration(const simcim_problem* problem, double tol,
                                     int32_t max_iter, uint64_t seed,
                                     double* lambda_max, double* residual,
                                     int32_t* iterations_used, int* converged,
                                     int* zero_matrix);

/* || x/||x|| - Jx/||Jx|| ||, in [0, 2]. */
simcim_status simcim_eig_proximity(const simcim_problem* problem,
                                   const double* x, int32_t n, double* out);

/* Exact optimum by exhaustive enumeration; guarded to n <= 24. spins may
 * be NULL; otherwise it receives the optimal configuration. */
simcim_status simcim_brute_force(const simcim_problem* problem, int8_t* spins,
                                 double* max_cut, double* min_energy);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SIMCIM_H */
