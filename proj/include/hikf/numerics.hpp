#pragma once

#include <Eigen/Dense>

namespace hikf {

/// Solve A X = B for symmetric positive-definite A by Cholesky.
/// Throws InputError if A is not symmetric to 1e-10 relative, and
/// DecompositionError if a Cholesky pivot is not positive.
Eigen::MatrixXd spd_solve(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Lower Cholesky factor L with A = L L^T; DecompositionError when A is not PD.
Eigen::MatrixXd cholesky_lower(const Eigen::MatrixXd& a);

struct SymmetricEigen {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // column i pairs with values(i)
};

/// Full eigendecomposition of a symmetric matrix, eigenvalues sorted descending.
SymmetricEigen sym_eig(const Eigen::MatrixXd& a);

/// Eigenvalues only (descending); cheaper for large spectra.
Eigen::VectorXd sym_eigenvalues(const Eigen::MatrixXd& a);

/// Max-abs asymmetry relative to the max-abs entry (0 for a zero matrix).
double relative_asymmetry(const Eigen::MatrixXd& a);

}  // namespace hikf
