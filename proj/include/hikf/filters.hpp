#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <Eigen/Dense>

#include "hikf/fmm.hpp"
#include "hikf/ssm.hpp"
#include "hikf/tomography.hpp"

namespace hikf {

// ---------------------------------------------------------------------------
// Dense Kalman filter

struct KfState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;  // m x m, symmetric
};

KfState kf_init(const StateSpaceModel& model);

/// Random-walk prediction: mean unchanged, P <- P + Q.
void kf_predict(KfState& state, const Eigen::MatrixXd& q);

/// Gain K = P H^T (H P H^T + R)^-1, mean += K (z - H mean), P -= K H P,
/// then P <- (P + P^T) / 2. An empty observation vector leaves the state alone.
void kf_update(KfState& state, const SparseRowMatrix& h, const Eigen::MatrixXd& r,
               const Eigen::VectorXd& z);

// ---------------------------------------------------------------------------
// Cross-covariance (hierarchical) Kalman filter

/// Products with Q that stay fixed for a monitoring configuration.
struct HikfPrecomputed {
  Eigen::MatrixXd cq;      // Q H^T, m x n
  Eigen::MatrixXd hcq;     // H Q H^T, n x n
  Eigen::VectorXd diag_q;  // K(0) per cell
};

/// Q H^T through the FMM (one matvec per ray).
HikfPrecomputed hikf_precompute(const StateSpaceModel& model, const FmmTree& fmm);

/// Q H^T with a dense Q; the exact reference route.
HikfPrecomputed hikf_precompute_dense(const StateSpaceModel& model);

struct HikfState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cross_cov;  // C = P H^T, m x n
  Eigen::MatrixXd hc;         // H C, n x n, maintained incrementally
  Eigen::VectorXd variance;   // diag(P)
  std::shared_ptr<const HikfPrecomputed> pre;
};

/// C_0 = alpha H^T, HC_0 = alpha H H^T, variance_0 = alpha.
HikfState hikf_init(const StateSpaceModel& model, std::shared_ptr<const HikfPrecomputed> pre);

/// C += Q H^T, HC += H Q H^T, variance += diag(Q).
void hikf_predict(HikfState& state);

/// Gain K = C (HC + R)^-1; mean, C, HC and the variance are updated at
/// O(n^2 m). Throws NumericalConsistencyError when a posterior variance
/// falls below -1e-10 max(prior variance).
void hikf_update(HikfState& state, const SparseRowMatrix& h, const Eigen::MatrixXd& r,
                 const Eigen::VectorXd& z);

// ---------------------------------------------------------------------------
// Perturbed-observation ensemble Kalman filter

/// Draws w ~ N(0, Q) as L xi with L the Cholesky factor of Q + jitter I.
class QSampler {
 public:
  static constexpr double kRelativeJitter = 1e-10;

  /// Dense factorization of the model's Q; jitter = 1e-10 * max diag(Q).
  explicit QSampler(const StateSpaceModel& model);
  /// Q = 0.
  static QSampler zero(Eigen::Index m);

  Eigen::Index dim() const noexcept { return factor_.rows(); }
  bool is_zero() const noexcept { return zero_; }
  const Eigen::MatrixXd& factor() const noexcept { return factor_; }

 private:
  QSampler() = default;
  Eigen::MatrixXd factor_;
  bool zero_ = false;
};

struct EnkfState {
  Eigen::MatrixXd ensemble;  // m x N
  std::uint64_t seed = 0;
  std::uint64_t step = 0;

  Eigen::Index size() const noexcept { return ensemble.cols(); }
};

EnkfState enkf_init(const StateSpaceModel& model, Eigen::Index members, std::uint64_t seed);

/// Forecast: step += 1, every member gets an independent draw of Q noise
/// from NormalStream::derived(seed, 2 j, step).
void enkf_forecast(EnkfState& state, const QSampler& sampler);

/// Analysis with perturbed observations z + eps_j, eps_j ~ N(0, R), drawn from
/// NormalStream::derived(seed, 2 j + 1, step). The gain is assembled from
/// H A and A without forming A A^T.
void enkf_analysis(EnkfState& state, const SparseRowMatrix& h, const Eigen::MatrixXd& r,
                   const Eigen::VectorXd& z);

/// enkf_forecast followed by enkf_analysis.
void enkf_step(EnkfState& state, const QSampler& sampler, const SparseRowMatrix& h,
               const Eigen::MatrixXd& r, const Eigen::VectorXd& z);

struct EnkfStatistics {
  Eigen::VectorXd mean;
  Eigen::VectorXd variance;  // row sums of A .* A
  Eigen::MatrixXd anomalies;  // A = (X - mean 1^T) / sqrt(N - 1)
};

EnkfStatistics enkf_statistics(const EnkfState& state);

// ---------------------------------------------------------------------------
// Common step interface used by the experiment driver.

class Filter {
 public:
  virtual ~Filter() = default;
  virtual std::string name() const = 0;
  virtual void predict() = 0;
  virtual void update(const Eigen::VectorXd& z) = 0;
  virtual Eigen::VectorXd mean() const = 0;
  virtual Eigen::VectorXd variance() const = 0;
  /// Bytes of the dominant payload arrays (see metrics::storage_bytes).
  virtual std::size_t storage_bytes() const = 0;
};

class KalmanFilter final : public Filter {
 public:
  explicit KalmanFilter(const StateSpaceModel& model);
  std::string name() const override { return "kf"; }
  void predict() override { kf_predict(state_, q_); }
  void update(const Eigen::VectorXd& z) override;
  Eigen::VectorXd mean() const override { return state_.mean; }
  Eigen::VectorXd variance() const override { return state_.cov.diagonal(); }
  std::size_t storage_bytes() const override;
  const KfState& state() const noexcept { return state_; }

 private:
  const StateSpaceModel* model_;
  Eigen::MatrixXd q_;
  Eigen::MatrixXd r_;
  KfState state_;
};

class HierarchicalKalmanFilter final : public Filter {
 public:
  HierarchicalKalmanFilter(const StateSpaceModel& model, std::shared_ptr<const HikfPrecomputed> pre);
  std::string name() const override { return "hikf"; }
  void predict() override { hikf_predict(state_); }
  void update(const Eigen::VectorXd& z) override;
  Eigen::VectorXd mean() const override { return state_.mean; }
  Eigen::VectorXd variance() const override { return state_.variance; }
  std::size_t storage_bytes() const override;
  const HikfState& state() const noexcept { return state_; }

 private:
  const StateSpaceModel* model_;
  Eigen::MatrixXd r_;
  HikfState state_;
};

class EnsembleKalmanFilter final : public Filter {
 public:
  EnsembleKalmanFilter(const StateSpaceModel& model, std::shared_ptr<const QSampler> sampler,
                       Eigen::Index members, std::uint64_t seed);
  std::string name() const override { return "enkf" + std::to_string(state_.size()); }
  void predict() override { enkf_forecast(state_, *sampler_); }
  void update(const Eigen::VectorXd& z) override;
  Eigen::VectorXd mean() const override { return state_.ensemble.rowwise().mean(); }
  Eigen::VectorXd variance() const override { return enkf_statistics(state_).variance; }
  std::size_t storage_bytes() const override;
  const EnkfState& state() const noexcept { return state_; }

 private:
  const StateSpaceModel* model_;
  std::shared_ptr<const QSampler> sampler_;
  Eigen::MatrixXd r_;
  EnkfState state_;
};

}  // namespace hikf
