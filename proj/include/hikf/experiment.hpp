#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "hikf/config.hpp"
#include "hikf/filters.hpp"
#include "hikf/metrics.hpp"
#include "hikf/ssm.hpp"
#include "hikf/tomography.hpp"

namespace hikf {

/// Dense KF runs above this many cells are refused unless overridden.
inline constexpr std::size_t kDenseKfCellLimit = 20000;

/// Truth, data and model shared by every filter of one experiment.
struct Scenario {
  Grid2D grid;
  Acquisition acquisition;
  PlumeScenario plume;
  Simulation simulation;
  StateSpaceModel model;
};

Scenario build_scenario(const ExperimentConfig& config);

struct RunOptions {
  bool override_size_guard = false;
  bool parallel_filters = false;  // timings become non-comparable
  bool keep_snapshots = true;
};

/// Per-step estimates of one filter, kept for metrics and snapshot files.
struct FilterTrace {
  std::string name;
  std::vector<Eigen::VectorXd> means;      // step 1..T
  std::vector<Eigen::VectorXd> variances;  // step 1..T (empty if not kept)
  std::vector<std::optional<std::size_t>> ranks;
  std::optional<Eigen::VectorXd> final_spectrum;
  std::string spectrum_note;
  PhaseTimes times;
  std::size_t storage_bytes = 0;
  std::string failure;  // non-empty when the run stopped early
};

/// Runs one filter over the whole record. Exceptions are caught and
/// recorded in FilterTrace::failure.
FilterTrace run_kf(const ExperimentConfig& config, const Scenario& sc, const RunOptions& opt);
FilterTrace run_hikf(const ExperimentConfig& config, const Scenario& sc, const RunOptions& opt);
FilterTrace run_enkf(const ExperimentConfig& config, const Scenario& sc, std::size_t members,
                     std::uint64_t seed, const RunOptions& opt);

struct Experiment {
  RunReport report;
  std::vector<FilterTrace> traces;
};

/// Runs every selected filter on one shared scenario and assembles the report.
Experiment run_filters(const ExperimentConfig& config, const Scenario& sc, const RunOptions& opt);

/// metrics.csv, summary.json, variance_<filter>.txt, snapshots_<filter>.txt.
void write_outputs(const std::filesystem::path& dir, const ExperimentConfig& config,
                   const Scenario& sc, const Experiment& ex, bool keep_snapshots);

/// The metrics CSV as a string (deterministic formatting).
std::string metrics_csv(const RunReport& report);

/// Loads, validates, runs and writes outputs. Returns the process exit code:
/// 0 success, 2 invalid input or refused run, 3 numerical failure (partial outputs).
int run_experiment(const std::filesystem::path& config_path, std::optional<std::uint64_t> seed,
                   std::optional<std::filesystem::path> out_dir, const RunOptions& opt);

// ---------------------------------------------------------------------------
// Benchmarks

struct FmmBenchRow {
  std::size_t points = 0;
  int n_cheb = 0;
  double build_seconds = 0.0;
  double matvec_seconds = 0.0;
  std::optional<double> dense_seconds;
  std::optional<double> relative_error;
};

/// Uniform random points in the unit square and a unit-norm vector of
/// uniform [0, 1) charges, both from NormalStream(seed); the dense product is skipped when
/// `with_dense` is false.
FmmBenchRow bench_fmm_case(std::size_t points, const KernelSpec& kernel, const FmmConfig& fmm,
                           std::uint64_t seed, bool with_dense);

/// Sum_j K(|x_i - x_j|) v_j evaluated directly, O(m^2) time, O(m) memory.
Eigen::VectorXd direct_kernel_sum(const KernelSpec& kernel, const PointSet& points,
                                  const Eigen::VectorXd& v);

struct FilterBenchRow {
  std::size_t nx = 0, ny = 0, cells = 0, rays = 0;
  std::string filter;
  PhaseTimes times;
  std::size_t storage_bytes = 0;
  bool skipped = false;
};

/// Runs the config's filters on rescaled grids (same physical domain).
std::vector<FilterBenchRow> bench_filters(const ExperimentConfig& config,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& grids,
                                          const RunOptions& opt);

}  // namespace hikf
