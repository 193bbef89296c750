#pragma once

#include <cmath>
#include <span>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "hikf/geom.hpp"

namespace hikf {

enum class KernelFamily { Gaussian, Exponential, Logarithm };

KernelFamily parse_kernel_family(std::string_view name);
std::string_view to_string(KernelFamily family);

/// Isotropic generalized covariance function K(r).
///
/// Gaussian and Exponential share the powered-exponential form
///   K(r) = variance * exp(-(r / length_scale)^power)
/// with power fixed at 2 for Gaussian and free in (0, 2] for Exponential
/// (1 gives the classical exponential kernel). Logarithm is
///   K(r) = log_amplitude * log(r),  log_amplitude < 0.
class KernelSpec {
 public:
  static KernelSpec gaussian(double variance, double length_scale);
  static KernelSpec exponential(double variance, double length_scale, double power = 1.0);
  static KernelSpec logarithm(double log_amplitude);

  KernelFamily family() const { return family_; }
  double variance() const { return variance_; }
  double length_scale() const { return length_scale_; }
  double power() const { return power_; }
  double log_amplitude() const { return log_amplitude_; }

  /// K(r). Throws InputError for non-finite or negative r, DomainError for
  /// the Logarithm family at r = 0.
  double operator()(double r) const;

  /// K(r) without argument checks; the Logarithm family returns 0 at r = 0.
  /// Used on hot paths (FMM near field) where the convention is documented.
  double evaluate_unchecked(double r) const noexcept {
    if (family_ == KernelFamily::Logarithm) {
      return r > 0.0 ? log_amplitude_ * std::log(r) : 0.0;
    }
    const double s = r * inv_length_scale_;
    if (power_ == 2.0) return variance_ * std::exp(-s * s);
    if (power_ == 1.0) return variance_ * std::exp(-s);
    return variance_ * std::exp(-std::pow(s, power_));
  }

  /// Value on the diagonal of the Gram matrix (r = 0, with the log convention).
  double diagonal_value() const noexcept { return evaluate_unchecked(0.0); }

 private:
  KernelSpec(KernelFamily family, double variance, double length_scale, double power,
             double log_amplitude);

  KernelFamily family_;
  double variance_;
  double length_scale_;
  double power_;
  double log_amplitude_;
  double inv_length_scale_;
};

/// Free-function form of KernelSpec::operator().
double evaluate(const KernelSpec& spec, double r);

/// Dense m x m Gram matrix with entry (i, j) = evaluate(spec, |x_i - x_j|).
/// No jitter is added. Throws for the Logarithm family since r = 0 on the
/// diagonal is outside its domain; use dense_gram_offdiag for that case.
Eigen::MatrixXd dense_gram(const KernelSpec& spec, const PointSet& points);

/// Gram matrix using evaluate_unchecked (log diagonal := 0).
Eigen::MatrixXd dense_gram_unchecked(const KernelSpec& spec, const PointSet& points);

/// Rectangular block K(targets[i], sources[j]) with evaluate_unchecked.
Eigen::MatrixXd kernel_block(const KernelSpec& spec, std::span<const Point2> targets,
                             std::span<const Point2> sources);

}  // namespace hikf
