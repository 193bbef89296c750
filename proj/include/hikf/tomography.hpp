#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "hikf/geom.hpp"

namespace hikf {

/// Crosswell survey: every source fires into every receiver, source-major
/// ray ordering (ray = source * receivers + receiver).
struct Acquisition {
  std::vector<Point2> sources;
  std::vector<Point2> receivers;

  std::size_t ray_count() const noexcept { return sources.size() * receivers.size(); }

  /// `source_count` sources on the vertical line x = source_x and
  /// `receiver_count` receivers on x = receiver_x, each set evenly spaced
  /// (cell-centred) over the grid height.
  static Acquisition crosswell(const Grid2D& grid, std::size_t source_count,
                               std::size_t receiver_count, double source_x, double receiver_x);
};

using SparseRowMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Straight-ray measurement operator: entry (i, j) is the length of ray i inside cell j.
class RayOperator {
 public:
  RayOperator() = default;
  RayOperator(SparseRowMatrix matrix, std::vector<double> ray_lengths);

  const SparseRowMatrix& matrix() const noexcept { return h_; }
  Eigen::Index rays() const noexcept { return h_.rows(); }
  Eigen::Index cells() const noexcept { return h_.cols(); }
  const std::vector<double>& ray_lengths() const noexcept { return lengths_; }

  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(h_); }
  /// H^T as a dense m x n matrix (FMM input for Q H^T).
  Eigen::MatrixXd dense_transpose() const { return Eigen::MatrixXd(h_.transpose()); }

 private:
  SparseRowMatrix h_;
  std::vector<double> lengths_;
};

/// Exact segment lengths of the straight ray a -> b through each cell of
/// the grid. Returns (cell, length) pairs in traversal order. Segments lying
/// exactly on a cell edge go to the cell below / to the left.
std::vector<std::pair<std::size_t, double>> trace_ray(const Grid2D& grid, Point2 a, Point2 b);

RayOperator build_ray_operator(const Grid2D& grid, const Acquisition& acq);

/// Delta y = H Delta s.
Eigen::VectorXd apply_forward(const RayOperator& h, const Eigen::VectorXd& ds);

/// One anisotropic Gaussian slowness anomaly whose centre, spreads and
/// amplitude move linearly from their start to end values between step 0
/// and the breakthrough step, then stay fixed. Spreads are measured along
/// the axes rotated by `rotation` radians.
struct PlumeBlob {
  Point2 start_center;
  Point2 end_center;
  double start_sigma_major = 1.0;
  double start_sigma_minor = 1.0;
  double end_sigma_major = 1.0;
  double end_sigma_minor = 1.0;
  double rotation = 0.0;
  double amplitude = 1.0;  // >= 0; slowness increases where velocity drops
};

struct PlumeParams {
  std::vector<PlumeBlob> blobs;
  std::size_t breakthrough_step = 16;

  /// Injection at the left well, migration up-dip toward the right well.
  static PlumeParams default_for(const Grid2D& grid, double source_x, double receiver_x);
};

/// Slowness perturbation fields Delta s_t for t = 0..T, with Delta s_0 = 0.
class PlumeScenario {
 public:
  PlumeScenario() = default;
  explicit PlumeScenario(std::vector<Eigen::VectorXd> fields);

  std::size_t steps() const noexcept { return fields_.empty() ? 0 : fields_.size() - 1; }
  Eigen::Index cells() const noexcept { return fields_.empty() ? 0 : fields_.front().size(); }
  const Eigen::VectorXd& field(std::size_t t) const { return fields_.at(t); }

  /// Columnar text: header line, then "step cell value" for every nonzero entry, t >= 1.
  void save(const std::filesystem::path& path) const;
  static PlumeScenario load(const std::filesystem::path& path, std::size_t cells);

 private:
  std::vector<Eigen::VectorXd> fields_;
};

PlumeScenario make_plume(const Grid2D& grid, const PlumeParams& params, std::size_t steps);

}  // namespace hikf
