#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hikf/geom.hpp"
#include "hikf/kernel.hpp"
#include "hikf/tomography.hpp"

namespace hikf {

/// Random-walk linear-Gaussian model:
///   x_t = x_{t-1} + w_t,  w_t ~ N(0, Q),  Q_ij = K(|p_i - p_j|)
///   z_t = H x_t + v_t,    v_t ~ N(0, obs_variance I)
/// with x_0 ~ N(initial_mean, alpha I). alpha = 0 means a known initial state.
struct StateSpaceModel {
  RayOperator h;
  double obs_variance = 1.0;
  KernelSpec q_kernel = KernelSpec::gaussian(1.0, 1.0);
  PointSet points;  // one location per state component
  Eigen::VectorXd initial_mean;
  double alpha = 0.0;

  Eigen::Index state_dim() const noexcept { return h.cells(); }
  Eigen::Index obs_dim() const noexcept { return h.rays(); }
  Eigen::MatrixXd r_matrix() const;
  Eigen::MatrixXd dense_q() const;

  /// Throws InputError on any violated invariant.
  void validate() const;
};

struct NoiseSpec {
  std::optional<double> snr_db;    // solve sigma^2 from the whole record
  std::optional<double> variance;  // or use this sigma^2 directly
};

/// sigma^2 such that 10 log10(signal_energy / (samples * sigma^2)) = snr_db.
double noise_variance_for_snr(double signal_energy, std::size_t samples, double snr_db);

struct Simulation {
  std::vector<Eigen::VectorXd> truth;         // x_1..x_T
  std::vector<Eigen::VectorXd> observations;  // z_1..z_T
  double noise_variance = 0.0;
  double signal_energy = 0.0;    // sum_t |H x_t|^2
  double realized_snr_db = 0.0;  // 10 log10(signal_energy / sum_t |v_t|^2)
  std::string rng_algorithm;
};

/// Truth states are the plume fields; observations are H x_t plus white
/// noise from NormalStream(seed). The noise level follows `noise`.
Simulation simulate_truth_and_data(const RayOperator& h, const PlumeScenario& plume,
                                   const NoiseSpec& noise, std::uint64_t seed);

}  // namespace hikf
