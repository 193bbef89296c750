#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace hikf {

/// Portable normal generator: std::mt19937_64 (sequence fixed by the C++
/// standard), 53-bit uniforms from the top bits, Box-Muller transform.
/// std::normal_distribution is avoided because its algorithm is
/// implementation-defined.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

  /// Stream keyed by (seed, a, b), e.g. (run seed, member, step).
  static NormalStream derived(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

  double uniform();  // (0, 1)
  double normal();
  Eigen::VectorXd normal_vector(Eigen::Index n);
  Eigen::MatrixXd normal_matrix(Eigen::Index rows, Eigen::Index cols);

  static constexpr const char* kAlgorithm =
      "mt19937_64; uniform=(u64>>11 + 0.5)*2^-53; normal=Box-Muller (cos/sin pair)";

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer, used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace hikf
