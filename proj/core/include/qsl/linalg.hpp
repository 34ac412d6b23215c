// Small dense solvers used as classical oracles. The eliminator here is
// deliberately self-contained (partial pivoting, no library backend) so the
// quantum solver and its reference answer never share a code path.

#pragma once

#include <Eigen/Dense>

namespace qsl {

inline constexpr double kPivotTolerance = 1e-12;

/// Solves Ax = b by Gaussian elimination with partial pivoting. Throws
/// singular_error when the best pivot falls below kPivotTolerance relative
/// to the largest entry of A.
Eigen::VectorXcd solve_gaussian(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b);
Eigen::VectorXd solve_gaussian(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

/// True when m equals its conjugate transpose within tol (max entry norm).
bool is_hermitian(const Eigen::MatrixXcd& m, double tol = 1e-9);

/// True when U^dagger U = I within tol.
bool is_unitary(const Eigen::MatrixXcd& m, double tol = 1e-9);

} // namespace qsl
