#pragma once

#include <Eigen/Dense>

namespace rcm::so_detail {

/// Exponential of a skew-symmetric matrix: closed form for n = 2, 3
/// (Rodrigues), real Schur reduction to planar rotation blocks for 4 <= n <= 8.
Eigen::MatrixXd exp_skew(const Eigen::MatrixXd& a);

/// Principal logarithm of a rotation matrix, same strategy as exp_skew.
/// Throws CutLocusError when some rotation angle is within 1e-6 of pi.
Eigen::MatrixXd log_rotation(const Eigen::MatrixXd& q);

/// Spectral norm of a skew-symmetric matrix, i.e. its largest planar angle.
double operator_norm_skew(const Eigen::MatrixXd& a);

}  // namespace rcm::so_detail
