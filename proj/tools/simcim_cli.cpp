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

// Command-line harness over the C library: loads or generates an
// instance, runs a solver batch, and emits results.csv + summary.json
// (+ trace.csv), or executes a benchmark manifest over many instances.
//
// Exit codes: 0 success, 2 configuration error, 3 instance parse error,
// 4 solver divergence, 5 output I/O error, 6 benchmark finished with
// per-problem failures.

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simcim.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitParse = 3;
constexpr int kExitDivergence = 4;
constexpr int kExitIo = 5;
constexpr int kExitBenchmarkPartial = 6;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void die(int exit_code, const std::string& message) {
  throw CliError{exit_code, message};
}

int exit_code_for(simcim_status status) {
  switch (status) {
    case SIMCIM_OK:
      return kExitOk;
    case SIMCIM_ERR_PARSE:
      return kExitParse;
    case SIMCIM_ERR_DIVERGENCE:
      return kExitDivergence;
    case SIMCIM_ERR_IO:
      return kExitIo;
    case SIMCIM_ERR_INVALID_ARGUMENT:
    case SIMCIM_ERR_INTERNAL:
    default:
      return kExitConfig;
  }
}

void check(simcim_status status) {
  if (status != SIMCIM_OK) die(exit_code_for(status), simcim_last_error());
}

struct ProblemDeleter {
  void operator()(simcim_problem* p) const { simcim_problem_free(p); }
};
struct BatchDeleter {
  void operator()(simcim_batch_result* b) const {
    simcim_batch_result_free(b);
  }
};
struct TraceDeleter {
  void operator()(simcim_trace* t) const { simcim_trace_free(t); }
};

using ProblemPtr = std::unique_ptr<simcim_problem, ProblemDeleter>;
using BatchPtr = std::unique_ptr<simcim_batch_result, BatchDeleter>;
using TracePtr = std::unique_ptr<simcim_trace, TraceDeleter>;

// All solver-parameter flags in one place; `set` tracks which ones the
// user provided so untouched fields keep the per-solver defaults.
struct ParamFlags {
  std::int32_t iterations = 1000;
  double zeta = 0.0;
  double zeta_auto = 0.0;
  double noise = 0.0;
  double x_sat = 0.0;
  double beta = 0.0;
  double v_start = 0.0;
  double v_end = 0.0;
  double steepness = 0.0;
  double alpha = 0.0;
  int nmfa_schedule = 1;
  double nmfa_s_start = 0.0;
  double nmfa_s_end = 0.0;
  double cim_w = 0.0;
  double cim_gamma = 0.0;
  double cim_s = 0.0;
  std::map<std::string, bool> set;
};

simcim_solver_kind kind_from_name(const std::string& solver) {
  if (solver == "simcim") return SIMCIM_SOLVER_SIMCIM;
  if (solver == "nmfa") return SIMCIM_SOLVER_NMFA;
  if (solver == "cim_physics") return SIMCIM_SOLVER_CIM_PHYSICS;
  die(kExitConfig, "unknown solver '" + solver + "'");
}

simcim_solver_config make_config(const std::string& solver,
                                 const ParamFlags& flags) {
  simcim_solver_config config;
  check(simcim_solver_config_init(kind_from_name(solver), &config));
  const auto on = [&](const char* key) {
    auto it = flags.set.find(key);
    return it != flags.set.end() && it->second;
  };
  config.iterations = flags.iterations;
  if (on("zeta")) config.zeta = flags.zeta;
  if (on("zeta-auto")) config.zeta_auto_scale = flags.zeta_auto;
  if (on("noise")) config.noise_amplitude = flags.noise;
  if (on("x-sat")) config.x_sat = flags.x_sat;
  if (on("beta")) config.momentum_beta = flags.beta;
  if (on("v-start")) config.v_start = flags.v_start;
  if (on("v-end")) config.v_end = flags.v_end;
  if (on("steepness")) config.steepness = flags.steepness;
  if (on("alpha")) config.alpha = flags.alpha;
  if (on("nmfa-schedule")) config.nmfa_use_schedule = flags.nmfa_schedule;
  if (on("nmfa-s-start")) config.nmfa_s_start = flags.nmfa_s_start;
  if (on("nmfa-s-end")) config.nmfa_s_end = flags.nmfa_s_end;
  if (on("cim-w")) config.cim_w = flags.cim_w;
  if (on("cim-gamma")) config.cim_gamma = flags.cim_gamma;
  if (on("cim-s")) config.cim_s = flags.cim_s;
  return config;
}

// --generate n,dist,seed with dist one of gaussian, gaussian:mean:std,
// discrete, discrete:p.
ProblemPtr generate_problem(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) {
    die(kExitConfig,
        "--generate expects 'n,dist,seed' (got '" + spec + "')");
  }

  std::int32_t n = 0;
  std::uint64_t seed = 0;
  try {
    n = static_cast<std::int32_t>(std::stol(parts[0]));
    seed = static_cast<std::uint64_t>(std::stoull(parts[2]));
  } catch (const std::exception&) {
    die(kExitConfig, "--generate: bad n or seed in '" + spec + "'");
  }

  std::vector<std::string> dist;
  std::stringstream ds(parts[1]);
  while (std::getline(ds, item, ':')) dist.push_back(item);
  if (dist.empty()) die(kExitConfig, "--generate: empty distribution");

  simcim_problem* raw = nullptr;
  if (dist[0] == "gaussian") {
    double mean = 0.0, stddev = 1.0;
    try {
      if (dist.size() > 1) mean = std::stod(dist[1]);
      if (dist.size() > 2) stddev = std::stod(dist[2]);
    } catch (const std::exception&) {
      die(kExitConfig, "--generate: bad gaussian parameters");
    }
    if (dist.size() > 3) die(kExitConfig, "--generate: bad gaussian spec");
    check(simcim_problem_generate_gaussian(n, mean, stddev, seed, &raw));
  } else if (dist[0] == "discrete") {
    double p = 1.0;
    try {
      if (dist.size() > 1) p = std::stod(dist[1]);
    } catch (const std::exception&) {
      die(kExitConfig, "--generate: bad discrete parameter");
    }
    if (dist.size() > 2) die(kExitConfig, "--generate: bad discrete spec");
    check(simcim_problem_generate_discrete(n, p, seed, &raw));
  } else {
    die(kExitConfig, "--generate: unknown distribution '" + dist[0] +
                         "' (use gaussian or discrete)");
  }
  return ProblemPtr(raw);
}

ProblemPtr load_problem(const std::string& path, const std::string& format) {
  if (format != "gset") {
    die(kExitConfig, "unknown format '" + format + "' (only gset)");
  }
  if (!std::filesystem::exists(path)) {
    die(kExitConfig, "graph file '" + path + "' does not exist");
  }
  simcim_problem* raw = nullptr;
  check(simcim_problem_load_gset(path.c_str(), &raw));
  return ProblemPtr(raw);
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

void write_results_csv(const std::filesystem::path& path,
                       const simcim_batch_result* batch) {
  std::ofstream out(path);
  if (!out) die(kExitIo, "cannot open '" + path.string() + "' for writing");
  out << "# schema_version=1\n";
  out << "run_index,seed,cut,energy,wall_time_ms\n";
  const std::int32_t runs = simcim_batch_run_count(batch);
  for (std::int32_t r = 0; r < runs; ++r) {
    double cut = 0.0, energy = 0.0, millis = 0.0;
    std::uint64_t seed = 0;
    check(simcim_batch_cut(batch, r, &cut));
    check(simcim_batch_energy(batch, r, &energy));
    check(simcim_batch_seed(batch, r, &seed));
    check(simcim_batch_millis(batch, r, &millis));
    out << r << ',' << seed << ',' << format_double(cut) << ','
        << format_double(energy) << ',' << format_double(millis) << '\n';
  }
  if (!out) die(kExitIo, "write failure on '" + path.string() + "'");
}

void write_trace_csv(const std::filesystem::path& path,
                     const simcim_trace* trace) {
  std::ofstream out(path);
  if (!out) die(kExitIo, "cannot open '" + path.string() + "' for writing");
  const std::int32_t records = simcim_trace_record_count(trace);
  const std::int32_t amps = simcim_trace_amplitude_count(trace);
  out << "# schema_version=1\n";
  out << "iteration,pump,eig_proximity";
  for (std::int32_t a = 0; a < amps; ++a) out << ",x" << a;
  out << '\n';
  std::vector<double> amplitudes(static_cast<std::size_t>(amps));
  for (std::int32_t k = 0; k < records; ++k) {
    std::int32_t iteration = 0;
    double pump = 0.0, proximity = 0.0;
    check(simcim_trace_record(trace, k, &iteration, &pump, &proximity,
                              amps > 0 ? amplitudes.data() : nullptr));
    out << iteration << ',' << format_double(pump) << ',';
    // The proximity is undefined (NaN) until the state leaves zero; the
    // field is left empty in that case.
    if (!std::isnan(proximity)) out << format_double(proximity);
    for (std::int32_t a = 0; a < amps; ++a) {
      out << ',' << format_double(amplitudes[static_cast<std::size_t>(a)]);
    }
    out << '\n';
  }
  if (!out) die(kExitIo, "write failure on '" + path.string() + "'");
}

ordered_json params_echo(const std::string& solver,
                         const simcim_solver_config& config,
                         const simcim_batch_result* batch, std::int32_t runs,
                         std::uint64_t master_seed, std::int32_t threads) {
  // Keys are the CLI option names: feeding this object back as a
  // key=value config file reproduces the run exactly (the resolved zeta
  // is echoed, which pins the same coupling the auto rule chose).
  ordered_json params;
  params["solver"] = solver;
  params["iterations"] = config.iterations;
  params["zeta"] = simcim_batch_effective_zeta(batch);
  params["zeta-auto"] = config.zeta_auto_scale;
  params["noise"] = config.noise_amplitude;
  params["x-sat"] = config.x_sat;
  params["beta"] = config.momentum_beta;
  params["v-start"] = config.v_start;
  params["v-end"] = config.v_end;
  params["steepness"] = config.steepness;
  params["alpha"] = config.alpha;
  params["nmfa-schedule"] = config.nmfa_use_schedule;
  params["nmfa-s-start"] = config.nmfa_s_start;
  params["nmfa-s-end"] = config.nmfa_s_end;
  params["cim-w"] = config.cim_w;
  params["cim-gamma"] = config.cim_gamma;
  params["cim-s"] = config.cim_s;
  params["runs"] = runs;
  params["seed"] = master_seed;
  params["threads"] = threads;
  return params;
}

ordered_json problem_metadata(const simcim_problem* problem,
                              const std::string& source) {
  const std::int32_t n = simcim_problem_size(problem);
  const std::int64_t edges = simcim_problem_edge_count(problem);
  ordered_json meta;
  meta["name"] = simcim_problem_name(problem);
  meta["n"] = n;
  meta["edges"] = edges;
  meta["density"] =
      n > 1 ? static_cast<double>(edges) / (0.5 * n * (n - 1.0)) : 0.0;
  meta["storage"] = simcim_problem_is_dense(problem) ? "dense" : "sparse";
  meta["integer_weights"] = simcim_problem_integer_weights(problem) != 0;
  meta["source"] = source;
  return meta;
}

ordered_json histogram_json(const simcim_batch_result* batch) {
  std::int32_t bins = 0;
  check(simcim_batch_cut_histogram(batch, 0.0, nullptr, nullptr, nullptr,
                                   &bins));
  std::vector<std::int64_t> counts(static_cast<std::size_t>(bins));
  double first_edge = 0.0, width = 0.0;
  check(simcim_batch_cut_histogram(batch, 0.0, &first_edge, &width,
                                   counts.data(), &bins));
  ordered_json h;
  h["bin_width"] = width;
  h["first_edge"] = first_edge;
  h["counts"] = counts;
  return h;
}

ordered_json summary_json(const simcim_problem* problem,
                          const std::string& source, const std::string& solver,
                          const simcim_solver_config& config,
                          const simcim_batch_result* batch, std::int32_t runs,
                          std::uint64_t master_seed, std::int32_t threads) {
  double min = 0.0, max = 0.0, mean = 0.0, stddev = 0.0;
  check(simcim_batch_cut_stats(batch, &min, &max, &mean, &stddev));
  const std::int32_t best = simcim_batch_best_run(batch);
  double best_cut = 0.0, best_energy = 0.0;
  std::uint64_t best_seed = 0;
  check(simcim_batch_cut(batch, best, &best_cut));
  check(simcim_batch_energy(batch, best, &best_energy));
  check(simcim_batch_seed(batch, best, &best_seed));

  ordered_json summary;
  summary["schema_version"] = 1;
  summary["problem"] = problem_metadata(problem, source);
  summary["params"] = params_echo(solver, config, batch, runs, master_seed,
                                  threads);
  summary["stats"] = {
      {"min", min}, {"max", max}, {"mean", mean}, {"stddev", stddev}};
  summary["best"] = {{"run_index", best},
                     {"cut", best_cut},
                     {"energy", best_energy},
                     {"seed", best_seed}};
  summary["histogram"] = histogram_json(batch);
  summary["total_wall_time_ms"] = simcim_batch_total_millis(batch);
  summary["mean_run_wall_time_ms"] =
      runs > 0 ? simcim_batch_total_millis(batch) / runs : 0.0;
  return summary;
}

void write_json(const std::filesystem::path& path, const ordered_json& value) {
  std::ofstream out(path);
  if (!out) die(kExitIo, "cannot open '" + path.string() + "' for writing");
  out << value.dump(2) << '\n';
  if (!out) die(kExitIo, "write failure on '" + path.string() + "'");
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    die(kExitIo, "cannot create output directory '" + dir.string() + "'");
  }
}

// One solver batch plus its emitted files; shared by the single-run mode
// and the benchmark suite.
ordered_json execute_batch(const simcim_problem* problem,
                           const std::string& source,
                           const std::string& solver,
                           const simcim_solver_config& config,
                           std::int32_t runs, std::uint64_t master_seed,
                           std::int32_t threads,
                           const std::filesystem::path& out_dir, bool trace,
                           std::int32_t trace_stride,
                           std::int32_t trace_spins) {
  simcim_batch_result* raw_batch = nullptr;
  check(simcim_run_batch(problem, &config, runs, master_seed, threads,
                         &raw_batch));
  BatchPtr batch(raw_batch);

  ensure_directory(out_dir);
  write_results_csv(out_dir / "results.csv", batch.get());
  ordered_json summary = summary_json(problem, source, solver, config,
                                      batch.get(), runs, master_seed, threads);

  if (trace) {
    // The traced run replays run 0 of the batch: same derived seed, same
    // stream, identical trajectory.
    std::uint64_t seed0 = 0;
    check(simcim_batch_seed(batch.get(), 0, &seed0));
    simcim_trace* raw_trace = nullptr;
    simcim_batch_result* raw_single = nullptr;
    check(simcim_run_single(problem, &config, seed0, trace_stride, trace_spins,
                            &raw_trace, &raw_single));
    TracePtr trace_handle(raw_trace);
    BatchPtr single(raw_single);
    write_trace_csv(out_dir / "trace.csv", trace_handle.get());
    summary["trace"] = {{"file", "trace.csv"},
                        {"run_index", 0},
                        {"stride", trace_stride},
                        {"tracked_spins", simcim_trace_amplitude_count(
                                              trace_handle.get())}};
  }

  write_json(out_dir / "summary.json", summary);
  return summary;
}

// ---- benchmark manifest mode ----------------------------------------

simcim_solver_config config_from_json(const std::string& solver,
                                      const ordered_json& defaults,
                                      const ordered_json& overrides) {
  simcim_solver_config config;
  check(simcim_solver_config_init(kind_from_name(solver), &config));
  const auto apply = [&](const ordered_json& src) {
    for (const auto& [key, value] : src.items()) {
      if (key == "iterations") {
        config.iterations = value.get<std::int32_t>();
      } else if (key == "zeta") {
        config.zeta = value.get<double>();
      } else if (key == "zeta-auto") {
        config.zeta_auto_scale = value.get<double>();
      } else if (key == "noise") {
        config.noise_amplitude = value.get<double>();
      } else if (key == "x-sat") {
        config.x_sat = value.get<double>();
      } else if (key == "beta") {
        config.momentum_beta = value.get<double>();
      } else if (key == "v-start") {
        config.v_start = value.get<double>();
      } else if (key == "v-end") {
        config.v_end = value.get<double>();
      } else if (key == "steepness") {
        config.steepness = value.get<double>();
      } else if (key == "alpha") {
        config.alpha = value.get<double>();
      } else if (key == "nmfa-schedule") {
        config.nmfa_use_schedule = value.get<int>();
      } else if (key == "nmfa-s-start") {
        config.nmfa_s_start = value.get<double>();
      } else if (key == "nmfa-s-end") {
        config.nmfa_s_end = value.get<double>();
      } else if (key == "cim-w") {
        config.cim_w = value.get<double>();
      } else if (key == "cim-gamma") {
        config.cim_gamma = value.get<double>();
      } else if (key == "cim-s") {
        config.cim_s = value.get<double>();
      } else {
        die(kExitConfig, "manifest: unknown solver parameter '" + key + "'");
      }
    }
  };
  if (defaults.is_object()) apply(defaults);
  if (overrides.is_object()) apply(overrides);
  return config;
}

std::string sanitize_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) != 0 ||
                          c == '-' || c == '.'
                      ? c
                      : '_');
  }
  return out.empty() ? std::string("problem") : out;
}

int run_benchmark(const std::string& manifest_path,
                  const std::filesystem::path& out_dir, std::int32_t threads) {
  std::ifstream in(manifest_path);
  if (!in) die(kExitConfig, "cannot open manifest '" + manifest_path + "'");
  ordered_json manifest;
  try {
    in >> manifest;
  } catch (const std::exception& e) {
    die(kExitConfig, std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!manifest.contains("problems") || !manifest["problems"].is_array() ||
      manifest["problems"].empty()) {
    die(kExitConfig, "manifest must list at least one problem");
  }
  const ordered_json defaults = manifest.value("defaults", ordered_json::object());
  const ordered_json default_solvers =
      defaults.value("solvers", ordered_json::object());

  ensure_directory(out_dir);

  ordered_json report;
  report["schema_version"] = 1;
  report["problems"] = ordered_json::array();
  // solver -> per-problem mean cuts / max cuts, for the cross-problem
  // aggregate statistics.
  std::map<std::string, std::vector<double>> mean_cuts;
  std::map<std::string, std::vector<double>> max_cuts;
  bool any_failed = false;

  for (const auto& entry : manifest["problems"]) {
    ordered_json problem_report;
    try {
      if (!entry.is_object()) die(kExitConfig, "manifest: bad problem entry");

      ProblemPtr problem;
      std::string source;
      if (entry.contains("graph") == entry.contains("generate")) {
        die(kExitConfig,
            "manifest: each problem needs exactly one of graph/generate");
      }
      if (entry.contains("graph")) {
        problem = load_problem(entry["graph"].get<std::string>(), "gset");
        source = "file";
      } else {
        problem = generate_problem(entry["generate"].get<std::string>());
        source = "generated";
      }
      const std::string name = sanitize_name(
          entry.value("name", std::string(simcim_problem_name(problem.get()))));
      problem_report["name"] = name;

      const std::int32_t runs =
          entry.value("runs", defaults.value("runs", 100));
      const std::uint64_t seed =
          entry.value("seed", defaults.value("seed", std::uint64_t{0}));
      ordered_json solvers = entry.value("solvers", ordered_json::object());
      if (solvers.empty()) solvers = default_solvers;
      if (solvers.empty()) {
        die(kExitConfig, "manifest: no solvers listed for '" + name + "'");
      }

      problem_report["solver_results"] = ordered_json::object();
      for (const auto& [solver, overrides] : solvers.items()) {
        const simcim_solver_config config = config_from_json(
            solver, default_solvers.value(solver, ordered_json::object()),
            overrides);
        const std::filesystem::path dir = out_dir / name / solver;
        const ordered_json summary = execute_batch(
            problem.get(), source, solver, config, runs, seed, threads, dir,
            false, 1, 0);
        ordered_json cell;
        cell["stats"] = summary["stats"];
        cell["best_cut"] = summary["best"]["cut"];
        cell["total_wall_time_ms"] = summary["total_wall_time_ms"];
        cell["dir"] = (name + "/" + solver);
        problem_report["solver_results"][solver] = cell;
        mean_cuts[solver].push_back(summary["stats"]["mean"].get<double>());
        max_cuts[solver].push_back(summary["stats"]["max"].get<double>());
      }
    } catch (const CliError& e) {
      problem_report["error"] = e.message;
      any_failed = true;
      std::fprintf(stderr, "benchmark: problem failed: %s\n",
                   e.message.c_str());
    }
    report["problems"].push_back(problem_report);
  }

  report["aggregates"] = ordered_json::object();
  for (const auto& [solver, means] : mean_cuts) {
    double mean_sum = 0.0;
    for (double v : means) mean_sum += v;
    double max_sum = 0.0;
    for (double v : max_cuts[solver]) max_sum += v;
    report["aggregates"][solver] = {
        {"problems", means.size()},
        {"mean_of_mean_cuts", mean_sum / static_cast<double>(means.size())},
        {"mean_of_max_cuts", max_sum / static_cast<double>(means.size())}};
  }

  write_json(out_dir / "benchmark_report.json", report);
  return any_failed ? kExitBenchmarkPartial : kExitOk;
}

int run_cli(int argc, char** argv) {
  CLI::App app{
      "Ising/max-cut annealer: batched SimCIM dynamics with NMFA and "
      "full-physics CIM reference solvers"};
  app.set_version_flag("--version", simcim_version());
  app.set_config("--config", "", "Config file with key=value lines");

  std::string solver = "simcim";
  app.add_option("--solver", solver, "Solver: simcim, nmfa, cim_physics")
      ->check(CLI::IsMember({"simcim", "nmfa", "cim_physics"}));

  std::string graph;
  app.add_option("--graph", graph, "Instance file to load");
  std::string format = "gset";
  app.add_option("--format", format, "Instance file format")
      ->check(CLI::IsMember({"gset"}));
  std::string generate;
  app.add_option("--generate", generate,
                 "Generate instance: n,dist,seed with dist gaussian | "
                 "gaussian:mean:std | discrete | discrete:p");

  std::int32_t runs = 100;
  app.add_option("--runs", runs, "Independent runs in the batch");
  std::uint64_t master_seed = 0;
  app.add_option("--seed", master_seed, "Master seed for the batch");
  std::int32_t threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = hardware)");

  ParamFlags flags;
  app.add_option("--iterations", flags.iterations, "Iterations per run");
  app.add_option("--zeta", flags.zeta, "Coupling strength (overrides auto)");
  app.add_option("--zeta-auto", flags.zeta_auto,
                 "Auto coupling scale c in zeta = c / lambda_max");
  app.add_option("--noise", flags.noise, "Noise amplitude");
  app.add_option("--x-sat", flags.x_sat, "Saturation amplitude (simcim)");
  app.add_option("--beta", flags.beta, "Momentum coefficient (simcim)");
  app.add_option("--v-start", flags.v_start, "Pump ramp start (simcim)");
  app.add_option("--v-end", flags.v_end, "Pump ramp end (simcim)");
  app.add_option("--steepness", flags.steepness, "Ramp steepness");
  app.add_option("--alpha", flags.alpha, "Relaxation rate (nmfa)");
  app.add_option("--nmfa-schedule", flags.nmfa_schedule,
                 "Annealing-strength ramp on/off (nmfa)");
  app.add_option("--nmfa-s-start", flags.nmfa_s_start,
                 "Annealing ramp start (nmfa)");
  app.add_option("--nmfa-s-end", flags.nmfa_s_end,
                 "Annealing ramp end (nmfa)");
  app.add_option("--cim-w", flags.cim_w, "Parametric gain (cim_physics)");
  app.add_option("--cim-gamma", flags.cim_gamma, "Linear loss (cim_physics)");
  app.add_option("--cim-s", flags.cim_s, "Nonlinear loss (cim_physics)");

  bool trace = false;
  app.add_flag("--trace", trace, "Emit trace.csv for run 0");
  std::int32_t trace_stride = 1;
  app.add_option("--trace-stride", trace_stride,
                 "Record every k-th iteration");
  std::int32_t trace_spins = 8;
  app.add_option("--trace-spins", trace_spins,
                 "Amplitudes recorded per trace row");

  std::string out_dir = ".";
  app.add_option("--out-dir", out_dir, "Output directory");
  std::string manifest;
  app.add_option("--manifest", manifest,
                 "Benchmark manifest (JSON); runs many problems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  for (const std::string name :
       {"zeta", "zeta-auto", "noise", "x-sat", "beta", "v-start", "v-end",
        "steepness", "alpha", "nmfa-schedule", "nmfa-s-start", "nmfa-s-end",
        "cim-w", "cim-gamma", "cim-s"}) {
    flags.set[name] = app.count("--" + name) > 0;
  }

  if (!manifest.empty()) {
    if (!graph.empty() || !generate.empty()) {
      die(kExitConfig, "--manifest cannot be combined with --graph/--generate");
    }
    return run_benchmark(manifest, out_dir, threads);
  }

  if (graph.empty() == generate.empty()) {
    die(kExitConfig, "exactly one of --graph or --generate is required");
  }
  ProblemPtr problem;
  std::string source;
  if (!graph.empty()) {
    problem = load_problem(graph, format);
    source = "file";
  } else {
    problem = generate_problem(generate);
    source = "generated";
  }

  const simcim_solver_config config = make_config(solver, flags);
  execute_batch(problem.get(), source, solver, config, runs, master_seed,
                threads, out_dir, trace, trace_stride, trace_spins);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
}
