#pragma once

#include <Eigen/Dense>

namespace contactred::linalg {

/// Orthonormal basis of the column space; singular directions with
/// sigma <= drop_tol are discarded.
Eigen::MatrixXd column_space(const Eigen::MatrixXd& m, double drop_tol = 1e-10);

/// Orthonormal basis of the null space of m (right null space).
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double drop_tol = 1e-10);

/// Numerical rank after column normalization.
int rank(const Eigen::MatrixXd& m, double tol = 1e-9);

/// Residual of v against the column space of basis: ||v - proj(v)|| / max(1, ||v||).
double projection_residual(const Eigen::MatrixXd& basis, const Eigen::VectorXd& v);

/// Max projection residual of the columns of a against span(b).
double containment_residual(const Eigen::MatrixXd& b, const Eigen::MatrixXd& a);

/// Symmetric subspace-equality residual: max of both containment residuals.
double subspace_equality_residual(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Orthonormal basis of span(a) `intersect` span(b).
Eigen::MatrixXd intersect(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                          double drop_tol = 1e-10);

/// Orthonormal basis of span(a) + span(b).
Eigen::MatrixXd sum(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                    double drop_tol = 1e-10);

} // namespace contactred::linalg
