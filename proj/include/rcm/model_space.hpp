#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcm/types.hpp"

namespace rcm {

/// One of the four model spaces. `dim` is the intrinsic dimension; ambient
/// storage is dim (Euclidean), dim+1 (sphere, hyperboloid) or n*n with
/// dim = n(n-1)/2 (SO(n), 2 <= n <= 8).
struct ModelSpace {
  ManifoldKind kind = ManifoldKind::Euclidean;
  int dim = 1;
  NormFlavor norm_flavor = NormFlavor::Frobenius;

  static ModelSpace euclidean(int dim);
  static ModelSpace sphere(int dim);
  static ModelSpace hyperboloid(int dim);
  static ModelSpace special_orthogonal(int n, NormFlavor flavor = NormFlavor::Frobenius);

  int ambient_size() const;
  /// SO(n) only: the matrix size n.
  int matrix_size() const;
};

/// Minkowski form <a,b> = -a0*b0 + sum_{i>=1} ai*bi.
double minkowski_dot(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// nullopt when q satisfies the manifold's point invariant; otherwise a
/// description of the violated invariant with the residual magnitude.
std::optional<std::string> validate_point(const ModelSpace& space, const AmbientPoint& q);
std::optional<std::string> validate_tangent(const ModelSpace& space, const TangentVector& v);

/// Validating constructors. Throw InvalidInputError with the violation text.
AmbientPoint make_point(const ModelSpace& space, Eigen::VectorXd coords);
WeightedSample make_sample(const ModelSpace& space, std::vector<Eigen::VectorXd> points,
                           std::vector<double> masses);
WeightedSample make_sample(const ModelSpace& space, std::vector<AmbientPoint> points,
                           std::vector<double> masses);

AmbientPoint exp(const ModelSpace& space, const AmbientPoint& x, const Eigen::VectorXd& v);
AmbientPoint exp(const ModelSpace& space, const TangentVector& v);
/// Initial velocity of the minimizing geodesic from x to p. Throws
/// CutLocusError when p is at (or numerically too close to) the cut locus.
TangentVector log(const ModelSpace& space, const AmbientPoint& x, const AmbientPoint& p);
double dist(const ModelSpace& space, const AmbientPoint& x, const AmbientPoint& p);

/// Riemannian inner product on T_x (independent of norm_flavor).
double inner(const ModelSpace& space, const AmbientPoint& x, const Eigen::VectorXd& a,
             const Eigen::VectorXd& b);
/// Tangent norm honoring norm_flavor (spectral norm on SO(n) when Operator).
double norm(const ModelSpace& space, const AmbientPoint& x, const Eigen::VectorXd& v);
/// Orthogonal projection of an ambient vector onto T_x.
Eigen::VectorXd project_tangent(const ModelSpace& space, const AmbientPoint& x,
                                const Eigen::VectorXd& w);
/// Deterministic orthonormal basis of T_x: Gram-Schmidt over projected ambient
/// axes (left-translated planar generators on SO(n)).
std::vector<Eigen::VectorXd> tangent_basis(const ModelSpace& space, const AmbientPoint& x);
/// Levi-Civita parallel transport of w from T_from to T_to along the
/// connecting minimizing geodesic.
Eigen::VectorXd parallel_transport(const ModelSpace& space, const AmbientPoint& from,
                                   const AmbientPoint& to, const Eigen::VectorXd& w);

CurvatureData curvature_data(const ModelSpace& space);
/// Radius of the admissible ball: min(inj/2, pi/(4 sqrt(kappa_max))) when
/// kappa_max > 0, inj/2 otherwise; scaled by pi/2 on SO(n) under the Operator
/// flavor, whose convex sets are larger.
double admissible_radius(const ModelSpace& space);

/// Distance-preserving map of a model space. Payload per kind:
/// Euclidean x -> a*x + translation (a orthogonal), Sphere x -> a*x
/// (a orthogonal), Hyperboloid x -> a*x (a Lorentz, future-preserving),
/// SO(n) q -> a*q*b (a, b rotations).
struct Isometry {
  ManifoldKind kind = ManifoldKind::Euclidean;
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;            // SO(n) right factor
  Eigen::VectorXd translation;  // Euclidean only
};

Isometry identity_isometry(const ModelSpace& space);
std::optional<std::string> validate_isometry(const ModelSpace& space, const Isometry& g);
/// Throws InvalidInputError when the payload fails its defining identity.
AmbientPoint apply_isometry(const ModelSpace& space, const Isometry& g, const AmbientPoint& q);
/// Ambient pushforward of tangent coordinates under g.
Eigen::VectorXd apply_isometry_tangent(const ModelSpace& space, const Isometry& g,
                                       const Eigen::VectorXd& v);

/// exp(center, v) with v uniform in the tangent ball of radius r; deterministic
/// in the seed. Requires 0 < r <= admissible_radius(space).
AmbientPoint random_point_in_ball(const ModelSpace& space, const AmbientPoint& center, double r,
                                  std::uint64_t seed);

}  // namespace rcm
