#include "rcm/so_matrix.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "rcm/types.hpp"

namespace rcm::so_detail {
namespace {

// Angles this close to pi are treated as cut-locus hits; the principal log is
// ill-conditioned there and the solver never needs it inside an admissible
// ball.
constexpr double kPiMargin = 1e-6;

Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& w) {
  Eigen::Matrix3d m;
  m << 0.0, -w.z(), w.y(), w.z(), 0.0, -w.x(), -w.y(), w.x(), 0.0;
  return m;
}

Eigen::Matrix2d planar_rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

Eigen::Matrix3d rodrigues(const Eigen::Vector3d& w) {
  const double theta2 = w.squaredNorm();
  const double theta = std::sqrt(theta2);
  const Eigen::Matrix3d k = cross_matrix(w);
  double a;  // sin(theta)/theta
  double b;  // (1 - cos(theta))/theta^2
  if (theta < 1e-4) {
    a = 1.0 - theta2 / 6.0 * (1.0 - theta2 / 20.0);
    b = 0.5 - theta2 / 24.0 * (1.0 - theta2 / 30.0);
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / theta2;
  }
  return Eigen::Matrix3d::Identity() + a * k + b * k * k;
}

}  // namespace

Eigen::MatrixXd exp_skew(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  if (n == 2) {
    return planar_rotation(0.5 * (a(1, 0) - a(0, 1)));
  }
  if (n == 3) {
    // unskew with symmetrization so tiny symmetric noise cannot leak in
    const Eigen::Vector3d w(0.5 * (a(2, 1) - a(1, 2)), 0.5 * (a(0, 2) - a(2, 0)),
                            0.5 * (a(1, 0) - a(0, 1)));
    return rodrigues(w);
  }

  // n in [4, 8]: the real Schur form of a skew matrix is block diagonal with
  // 2x2 blocks [[0, -theta], [theta, 0]] and scalar zeros.
  Eigen::RealSchur<Eigen::MatrixXd> schur(a);
  if (schur.info() != Eigen::Success) {
    throw InvalidInputError("exp_skew: Schur decomposition failed");
  }
  const Eigen::MatrixXd& t = schur.matrixT();
  const Eigen::MatrixXd& u = schur.matrixU();
  Eigen::MatrixXd blocks = Eigen::MatrixXd::Identity(n, n);
  Eigen::Index i = 0;
  while (i < n) {
    if (i + 1 < n && t(i + 1, i) != 0.0) {
      const double theta = 0.5 * (t(i + 1, i) - t(i, i + 1));
      blocks.block<2, 2>(i, i) = planar_rotation(theta);
      i += 2;
    } else {
      i += 1;
    }
  }
  return u * blocks * u.transpose();
}

Eigen::MatrixXd log_rotation(const Eigen::MatrixXd& q) {
  const Eigen::Index n = q.rows();
  if (n == 2) {
    const double theta = std::atan2(q(1, 0), q(0, 0));
    if (M_PI - std::abs(theta) < kPiMargin) {
      throw CutLocusError("rotation angle within 1e-6 of pi");
    }
    Eigen::Matrix2d l;
    l << 0.0, -theta, theta, 0.0;
    return l;
  }
  if (n == 3) {
    const Eigen::Matrix3d anti = 0.5 * (q - q.transpose());
    const Eigen::Vector3d v(anti(2, 1), anti(0, 2), anti(1, 0));  // axis * sin(theta)
    const double s = std::min(v.norm(), 1.0);
    const double c = std::clamp(0.5 * (q.trace() - 1.0), -1.0, 1.0);
    const double theta = std::atan2(s, c);
    if (M_PI - theta < kPiMargin) {
      throw CutLocusError("rotation angle within 1e-6 of pi");
    }
    double scale;  // theta / sin(theta)
    if (theta < 1e-8) {
      scale = 1.0 + theta * theta / 6.0;
    } else {
      scale = theta / std::sin(theta);
    }
    return scale * anti;
  }

  // n in [4, 8]: an orthogonal quasi-triangular Schur factor is necessarily
  // block diagonal; read the planar angles off the 2x2 rotation blocks.
  Eigen::RealSchur<Eigen::MatrixXd> schur(q);
  if (schur.info() != Eigen::Success) {
    throw InvalidInputError("log_rotation: Schur decomposition failed");
  }
  const Eigen::MatrixXd& t = schur.matrixT();
  const Eigen::MatrixXd& u = schur.matrixU();
  Eigen::MatrixXd blocks = Eigen::MatrixXd::Zero(n, n);
  Eigen::Index i = 0;
  while (i < n) {
    if (i + 1 < n && t(i + 1, i) != 0.0) {
      const double theta = std::atan2(t(i + 1, i), t(i, i));
      if (M_PI - std::abs(theta) < kPiMargin) {
        throw CutLocusError("rotation angle within 1e-6 of pi");
      }
      blocks(i, i + 1) = -theta;
      blocks(i + 1, i) = theta;
      i += 2;
    } else {
      // real eigenvalue +-1; -1 is a planar angle of exactly pi
      if (t(i, i) < 0.0) {
        throw CutLocusError("rotation angle within 1e-6 of pi");
      }
      i += 1;
    }
  }
  return u * blocks * u.transpose();
}

double operator_norm_skew(const Eigen::MatrixXd& a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  return svd.singularValues()(0);
}

}  // namespace rcm::so_detail
