#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hikf/filters.hpp"

namespace hikf {

struct RelativeError {
  double value = 0.0;
  bool absolute = false;  // reference norm was zero; value is |x_est| instead
};

/// |x_est - x_ref|_2 / |x_ref|_2.
RelativeError relative_error(const Eigen::VectorXd& x_est, const Eigen::VectorXd& x_ref);

struct EffectiveRank {
  std::size_t rank = 0;
  bool all_zero = false;          // total variance is zero; rank reported as 0
  bool clamped_negatives = false;  // negative eigenvalues were treated as 0
};

/// Smallest k whose leading k eigenvalues carry at least `fraction` of the
/// total. Eigenvalues must be sorted descending.
EffectiveRank effective_rank(std::span<const double> eigenvalues, double fraction = 0.95);
EffectiveRank effective_rank(const Eigen::VectorXd& eigenvalues, double fraction = 0.95);

/// Descending, nonnegative eigenvalues of the posterior covariance.
Eigen::VectorXd posterior_spectrum(const KfState& state);
/// Nonzero part from A^T A (or A A^T when smaller), zero-padded to m.
Eigen::VectorXd posterior_spectrum(const EnkfState& state);
/// Not reconstructible from (C, variance).
std::optional<Eigen::VectorXd> posterior_spectrum(const HikfState& state);

/// Dominant-term payload in bytes: P for KF; C + variance + Q H^T + diag(Q)
/// for HiKF; the ensemble for EnKF.
std::size_t storage_bytes(const KfState& state);
std::size_t storage_bytes(const HikfState& state);
std::size_t storage_bytes(const EnkfState& state);

struct PhaseTimes {
  double precompute_seconds = 0.0;
  double online_seconds = 0.0;
};

struct StepRecord {
  std::size_t step = 0;
  double error_vs_truth = 0.0;
  std::optional<double> error_vs_kf;
  std::optional<std::size_t> effective_rank;
};

struct FilterReport {
  std::string name;
  std::vector<StepRecord> steps;
  Eigen::VectorXd final_mean;
  Eigen::VectorXd final_variance;
  std::optional<Eigen::VectorXd> final_spectrum;
  PhaseTimes times;
  std::size_t storage_bytes = 0;
  std::string spectrum_note;
};

struct RunReport {
  static constexpr int kSchemaVersion = 1;
  std::vector<FilterReport> filters;
  double noise_variance = 0.0;
  double realized_snr_db = 0.0;
  std::string rng_algorithm;
  bool timings_comparable = true;
  bool failed = false;
  std::string failure;
};

/// Timing and storage rows for every filter in the report.
struct CostRow {
  std::string filter;
  double precompute_seconds;
  double online_seconds;
  std::size_t storage_bytes;
};
std::vector<CostRow> account_costs(const RunReport& report);

}  // namespace hikf
