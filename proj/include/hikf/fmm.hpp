#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hikf/geom.hpp"
#include "hikf/kernel.hpp"

namespace hikf {

struct FmmConfig {
  int n_cheb = 5;                     // Chebyshev nodes per dimension, [2, 12]
  std::size_t max_leaf_points = 64;   // split a box while it holds more than this
  int max_depth = 20;                 // hard cap, reached only for (near-)coincident points
  std::optional<double> tolerance_hint;  // informational; accuracy follows n_cheb

  void validate() const;
};

/// 1D Chebyshev nodes of the first kind on [-1, 1], x_k = cos((2k - 1) pi / 2n).
std::vector<double> chebyshev_nodes(int n);

/// Chebyshev interpolation weight S_n(x, y) = 1/n + 2/n sum_{k=1}^{n-1} T_k(x) T_k(y).
double chebyshev_weight(int n, double x, double y);

/// Black-box FMM for a translation-invariant kernel on a 2D point set.
///
/// Points are sorted into an adaptive quadtree; a box is split while it
/// holds more than max_leaf_points. Same-level boxes that are not adjacent
/// interact through Chebyshev interpolation (P2M, M2M, M2L, L2L, L2P); all
/// remaining leaf pairs form the dense near field. Every (target, source)
/// pair is covered exactly once by the union of both lists.
class FmmTree {
 public:
  struct Node {
    Point2 center;
    double half_width = 0.0;
    int level = 0;
    long ix = 0;  // integer box coordinates at this level
    long iy = 0;
    int parent = -1;
    std::array<int, 4> children{-1, -1, -1, -1};
    std::size_t begin = 0;  // range into the permuted point order
    std::size_t end = 0;
    bool leaf = true;

    std::size_t point_count() const noexcept { return end - begin; }
  };

  struct FarPair {
    int target;
    int source;
    int m2l;  // index into the M2L operator cache
  };

  struct NearPair {
    int target;
    int source;
    int block;        // index into near_blocks_
    bool transposed;  // stored block is K(source, target)
  };

  FmmTree(const PointSet& points, const KernelSpec& kernel, const FmmConfig& config = {});

  std::size_t size() const noexcept { return points_.size(); }
  const FmmConfig& config() const noexcept { return config_; }
  const KernelSpec& kernel() const noexcept { return kernel_; }

  /// u_i = sum_j K(x_i, x_j) v_j, approximated. Throws InputError on length mismatch.
  Eigen::VectorXd matvec(const Eigen::VectorXd& v) const;

  /// Column-wise matvec of an m x k block.
  Eigen::MatrixXd matmat(const Eigen::MatrixXd& v) const;

  // Structure inspection.
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<FarPair>& far_pairs() const noexcept { return far_; }
  const std::vector<NearPair>& near_pairs() const noexcept { return near_; }
  /// Original point indices in tree order; a node owns order()[begin, end).
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  int depth() const noexcept { return depth_; }
  std::size_t leaf_count() const noexcept;
  std::size_t m2l_operator_count() const noexcept { return m2l_ops_.size(); }

  /// Bytes held by precomputed operators and near-field blocks.
  std::size_t operator_bytes() const noexcept;

 private:
  void build_nodes(std::size_t node, int depth_cap);
  void build_lists(int target, int source);
  int m2l_index(int level, long dix, long diy);
  Eigen::MatrixXd leaf_interpolation(const Node& node) const;

  std::vector<Point2> points_;  // stored in tree order
  std::vector<std::size_t> order_;
  KernelSpec kernel_;
  FmmConfig config_;
  double root_half_ = 0.0;
  int depth_ = 0;

  std::vector<Node> nodes_;
  std::vector<FarPair> far_;
  std::vector<NearPair> near_;

  std::vector<double> cheb_;                      // 1D nodes
  std::array<Eigen::MatrixXd, 4> m2m_;            // child quadrant -> parent, n^2 x n^2
  std::vector<Eigen::MatrixXd> leaf_interp_;      // per node (leaves only), n^2 x npts
  std::vector<Eigen::MatrixXd> m2l_ops_;
  std::map<std::array<long, 3>, int> m2l_lookup_;
  std::map<std::pair<int, int>, int> near_lookup_;
  std::vector<Eigen::MatrixXd> near_blocks_;
  std::vector<std::pair<int, int>> near_block_nodes_;  // (lower, higher) node index per block
};

}  // namespace hikf
