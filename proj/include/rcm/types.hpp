#pragma once

#include <Eigen/Dense>

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcm {

enum class ManifoldKind { Euclidean, Sphere, Hyperboloid, SpecialOrthogonal };

// Frobenius: Riemannian metric tr(A^T B) on SO(n) tangents. Operator: the
// spectral-norm Finsler metric. Both share the same connection, so exp/log
// never depend on this choice; only norms and ball radii do.
enum class NormFlavor { Frobenius, Operator };

const char* to_string(ManifoldKind kind);
const char* to_string(NormFlavor flavor);

/// A manifold point in ambient coordinates: length-n vectors for R^n, unit
/// vectors in R^{n+1} for S^n, upper-sheet Minkowski vectors for H^n, and
/// row-major n x n rotation matrices for SO(n).
struct AmbientPoint {
  Eigen::VectorXd coords;
  ManifoldKind manifold_tag = ManifoldKind::Euclidean;
};

/// Tangent vector in ambient coordinates, attached to its base point.
struct TangentVector {
  AmbientPoint base;
  Eigen::VectorXd coords;
};

/// Mass points p_i with weights m_i, sum m_i = 1. Build through make_sample,
/// which validates the points, renormalizes the masses and canonically orders
/// the pairs so downstream sums are order-independent bit for bit.
struct WeightedSample {
  std::vector<AmbientPoint> points;
  std::vector<double> masses;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

/// Sectional curvature bounds (1/length^2) and injectivity radius (length).
struct CurvatureData {
  double kappa_min = 0.0;
  double kappa_max = 0.0;
  double injectivity_radius = std::numeric_limits<double>::infinity();
};

class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

/// log(x, p) is undefined: p lies at (or numerically too close to) the cut
/// locus of x. Carries the sample index when raised while summing a field.
class CutLocusError : public std::runtime_error {
 public:
  explicit CutLocusError(const std::string& what, int sample_index = -1)
      : std::runtime_error(what), sample_index_(sample_index) {}
  int sample_index() const { return sample_index_; }

 private:
  int sample_index_;
};

/// The weighted ambient mean is too close to zero to project onto the sphere.
class DegenerateMeanError : public std::runtime_error {
 public:
  explicit DegenerateMeanError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rcm
