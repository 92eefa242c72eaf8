#include "rcm/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rcm/rng.hpp"
#include "rcm/so_matrix.hpp"
#include "rcm/summation.hpp"

namespace rcm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using RowMajorMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::MatrixXd as_matrix(const Eigen::VectorXd& flat, int n) {
  return Eigen::Map<const RowMajorMatrix>(flat.data(), n, n);
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& m) {
  RowMajorMatrix rm = m;
  return Eigen::Map<const Eigen::VectorXd>(rm.data(), rm.size());
}

std::string describe(double residual, const char* what) {
  std::ostringstream os;
  os << what << " (residual " << residual << ")";
  return os.str();
}

double sinc(double t) {
  if (t < 1e-4) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 * (1.0 - t2 / 20.0);
  }
  return std::sin(t) / t;
}

double sinhc(double t) {
  if (t < 1e-4) {
    const double t2 = t * t;
    return 1.0 + t2 / 6.0 * (1.0 + t2 / 20.0);
  }
  return std::sinh(t) / t;
}

// Shared by dist and log on the sphere: atan2 of the projected chord length
// against the clamped cosine is accurate for small angles where plain acos
// loses half the digits.
double sphere_angle(const Eigen::VectorXd& x, const Eigen::VectorXd& p) {
  const double c = std::clamp(x.dot(p), -1.0, 1.0);
  const double s = (p - c * x).norm();
  return std::atan2(s, c);
}

// cosh(d) - 1 evaluated from the coordinate difference, which avoids the
// cancellation in -<x,p> - 1 for nearby points.
double hyperbolic_t(const Eigen::VectorXd& x, const Eigen::VectorXd& p) {
  const Eigen::VectorXd diff = x - p;
  return std::max(0.5 * minkowski_dot(diff, diff), 0.0);
}

double hyperbolic_distance(const Eigen::VectorXd& x, const Eigen::VectorXd& p) {
  const double t = hyperbolic_t(x, p);
  return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

int so_matrix_size_for_dim(int dim) {
  for (int n = 2; n <= 8; ++n) {
    if (n * (n - 1) / 2 == dim) return n;
  }
  throw InvalidInputError("SO(n) intrinsic dimension must be n(n-1)/2 with 2 <= n <= 8");
}

void check_ambient(const ModelSpace& space, const AmbientPoint& q, const char* op) {
  if (q.manifold_tag != space.kind) {
    throw InvalidInputError(std::string(op) + ": point belongs to a different manifold");
  }
  if (q.coords.size() != space.ambient_size()) {
    throw InvalidInputError(std::string(op) + ": ambient size mismatch");
  }
}

}  // namespace

const char* to_string(ManifoldKind kind) {
  switch (kind) {
    case ManifoldKind::Euclidean: return "euclidean";
    case ManifoldKind::Sphere: return "sphere";
    case ManifoldKind::Hyperboloid: return "hyperboloid";
    case ManifoldKind::SpecialOrthogonal: return "special_orthogonal";
  }
  return "unknown";
}

const char* to_string(NormFlavor flavor) {
  return flavor == NormFlavor::Frobenius ? "frobenius" : "operator";
}

ModelSpace ModelSpace::euclidean(int dim) {
  if (dim < 1) throw InvalidInputError("euclidean: dim must be >= 1");
  return {ManifoldKind::Euclidean, dim, NormFlavor::Frobenius};
}

ModelSpace ModelSpace::sphere(int dim) {
  if (dim < 1) throw InvalidInputError("sphere: dim must be >= 1");
  return {ManifoldKind::Sphere, dim, NormFlavor::Frobenius};
}

ModelSpace ModelSpace::hyperboloid(int dim) {
  if (dim < 1) throw InvalidInputError("hyperboloid: dim must be >= 1");
  return {ManifoldKind::Hyperboloid, dim, NormFlavor::Frobenius};
}

ModelSpace ModelSpace::special_orthogonal(int n, NormFlavor flavor) {
  if (n < 2 || n > 8) throw InvalidInputError("special_orthogonal: supported sizes are 2 <= n <= 8");
  return {ManifoldKind::SpecialOrthogonal, n * (n - 1) / 2, flavor};
}

int ModelSpace::ambient_size() const {
  switch (kind) {
    case ManifoldKind::Euclidean: return dim;
    case ManifoldKind::Sphere:
    case ManifoldKind::Hyperboloid: return dim + 1;
    case ManifoldKind::SpecialOrthogonal: {
      const int n = so_matrix_size_for_dim(dim);
      return n * n;
    }
  }
  return dim;
}

int ModelSpace::matrix_size() const {
  if (kind != ManifoldKind::SpecialOrthogonal) {
    throw InvalidInputError("matrix_size: only defined for SO(n)");
  }
  return so_matrix_size_for_dim(dim);
}

double minkowski_dot(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a.tail(a.size() - 1).dot(b.tail(b.size() - 1)) - a[0] * b[0];
}

std::optional<std::string> validate_point(const ModelSpace& space, const AmbientPoint& q) {
  if (q.manifold_tag != space.kind) return "point tagged for a different manifold";
  if (q.coords.size() != space.ambient_size()) return "ambient coordinate count mismatch";
  if (!q.coords.allFinite()) return "coordinates are not finite";
  switch (space.kind) {
    case ManifoldKind::Euclidean:
      return std::nullopt;
    case ManifoldKind::Sphere: {
      const double residual = std::abs(q.coords.norm() - 1.0);
      if (residual > 1e-12) return describe(residual, "sphere point norm differs from 1");
      return std::nullopt;
    }
    case ManifoldKind::Hyperboloid: {
      // relative residual: far from the apex the form itself can only be
      // evaluated to about |x0|^2 * eps, so an absolute bound is meaningless
      const double scale = std::max(1.0, q.coords[0] * q.coords[0]);
      const double residual = std::abs(minkowski_dot(q.coords, q.coords) + 1.0) / scale;
      if (residual > 1e-12) return describe(residual, "Minkowski form differs from -1");
      if (q.coords[0] <= 0.0) return describe(q.coords[0], "time coordinate not positive");
      return std::nullopt;
    }
    case ManifoldKind::SpecialOrthogonal: {
      const int n = space.matrix_size();
      const Eigen::MatrixXd m = as_matrix(q.coords, n);
      const double residual = (m.transpose() * m - Eigen::MatrixXd::Identity(n, n)).norm();
      if (residual > 1e-10) return describe(residual, "matrix is not orthogonal");
      const double det = m.determinant();
      if (det <= 0.0) return describe(det, "determinant not positive");
      return std::nullopt;
    }
  }
  return "unknown manifold kind";
}

std::optional<std::string> validate_tangent(const ModelSpace& space, const TangentVector& v) {
  if (auto bad = validate_point(space, v.base)) return bad;
  if (v.coords.size() != space.ambient_size()) return "tangent coordinate count mismatch";
  if (!v.coords.allFinite()) return "tangent coordinates are not finite";
  switch (space.kind) {
    case ManifoldKind::Euclidean:
      return std::nullopt;
    case ManifoldKind::Sphere: {
      const double residual = std::abs(v.base.coords.dot(v.coords));
      if (residual > 1e-10) return describe(residual, "tangent not orthogonal to base");
      return std::nullopt;
    }
    case ManifoldKind::Hyperboloid: {
      const double residual = std::abs(minkowski_dot(v.base.coords, v.coords));
      if (residual > 1e-10) return describe(residual, "tangent not Minkowski-orthogonal to base");
      return std::nullopt;
    }
    case ManifoldKind::SpecialOrthogonal: {
      const int n = space.matrix_size();
      const Eigen::MatrixXd a = as_matrix(v.base.coords, n).transpose() * as_matrix(v.coords, n);
      const double residual = (a + a.transpose()).norm();
      if (residual > 1e-10) return describe(residual, "base^T * tangent is not skew-symmetric");
      return std::nullopt;
    }
  }
  return "unknown manifold kind";
}

AmbientPoint make_point(const ModelSpace& space, Eigen::VectorXd coords) {
  AmbientPoint q{std::move(coords), space.kind};
  if (auto bad = validate_point(space, q)) throw InvalidInputError(*bad);
  return q;
}

WeightedSample make_sample(const ModelSpace& space, std::vector<Eigen::VectorXd> points,
                           std::vector<double> masses) {
  std::vector<AmbientPoint> tagged;
  tagged.reserve(points.size());
  for (auto& c : points) tagged.push_back(AmbientPoint{std::move(c), space.kind});
  return make_sample(space, std::move(tagged), std::move(masses));
}

WeightedSample make_sample(const ModelSpace& space, std::vector<AmbientPoint> points,
                           std::vector<double> masses) {
  if (points.empty()) throw InvalidInputError("sample must contain at least one point");
  if (points.size() != masses.size()) {
    throw InvalidInputError("sample has " + std::to_string(points.size()) + " points but " +
                            std::to_string(masses.size()) + " masses");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (auto bad = validate_point(space, points[i])) {
      throw InvalidInputError("point " + std::to_string(i) + ": " + *bad);
    }
    if (!(masses[i] > 0.0)) {
      throw InvalidInputError("mass " + std::to_string(i) + " is not positive");
    }
  }
  // Canonical order (lexicographic coords, then mass) makes every downstream
  // fixed-order sum independent of the input permutation; the normalization
  // total is summed in canonical order for the same reason.
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    const auto& a = points[l].coords;
    const auto& b = points[r].coords;
    for (Eigen::Index k = 0; k < a.size(); ++k) {
      if (a[k] != b[k]) return a[k] < b[k];
    }
    return masses[l] < masses[r];
  });

  const double total =
      pairwise_sum(order.size(), [&](std::size_t i) { return masses[order[i]]; });
  if (std::abs(total - 1.0) > 1e-6) {
    std::ostringstream os;
    os << "masses sum to " << total << "; expected 1 within 1e-06";
    throw InvalidInputError(os.str());
  }

  WeightedSample sample;
  sample.points.reserve(points.size());
  sample.masses.reserve(points.size());
  for (std::size_t i : order) {
    sample.points.push_back(std::move(points[i]));
    sample.masses.push_back(masses[i] / total);
  }
  return sample;
}

AmbientPoint exp(const ModelSpace& space, const AmbientPoint& x, const Eigen::VectorXd& v) {
  check_ambient(space, x, "exp");
  if (v.size() != space.ambient_size()) throw InvalidInputError("exp: tangent size mismatch");
  switch (space.kind) {
    case ManifoldKind::Euclidean:
      return {x.coords + v, space.kind};
    case ManifoldKind::Sphere: {
      const double theta = v.norm();
      if (theta == 0.0) return x;
      Eigen::VectorXd y = std::cos(theta) * x.coords + sinc(theta) * v;
      y.normalize();
      return {std::move(y), space.kind};
    }
    case ManifoldKind::Hyperboloid: {
      const double s = std::sqrt(std::max(minkowski_dot(v, v), 0.0));
      if (s == 0.0) return x;
      Eigen::VectorXd y = std::cosh(s) * x.coords + sinhc(s) * v;
      // re-project to kill drift in the Minkowski norm, but only while the
      // form is measurable to ~1e-12; further out the rescaling would inject
      // a coherent radial error of size y0^2 * eps instead of removing one
      if (y[0] < 100.0) y /= std::sqrt(-minkowski_dot(y, y));
      return {std::move(y), space.kind};
    }
    case ManifoldKind::SpecialOrthogonal: {
      const int n = space.matrix_size();
      const Eigen::MatrixXd xm = as_matrix(x.coords, n);
      Eigen::MatrixXd a = xm.transpose() * as_matrix(v, n);
      a = 0.5 * (a - a.transpose().eval());
      return {flatten(xm * so_detail::exp_skew(a)), space.kind};
    }
  }
  throw InvalidInputError("exp: unknown manifold kind");
}

AmbientPoint exp(const ModelSpace& space, const TangentVector& v) {
  return exp(space, v.base, v.coords);
}

TangentVector log(const ModelSpace& space, const AmbientPoint& x, const AmbientPoint& p) {
  check_ambient(space, x, "log");
  check_ambient(space, p, "log");
  switch (space.kind) {
    case ManifoldKind::Euclidean:
      return {x, p.coords - x.coords};
    case ManifoldKind::Sphere: {
      const double c = std::clamp(x.coords.dot(p.coords), -1.0, 1.0);
      if (1.0 + c <= 1e-14) {
        throw CutLocusError("log on sphere: points are antipodal");
      }
      Eigen::VectorXd u = p.coords - c * x.coords;  // length sin(theta)
      const double s = u.norm();
      const double theta = std::atan2(s, c);
      if (s > 1e-12) u *= theta / s;
      return {x, std::move(u)};
    }
    case ManifoldKind::Hyperboloid: {
      const double d = hyperbolic_distance(x.coords, p.coords);
      const double c = minkowski_dot(x.coords, p.coords);  // = -cosh d
      Eigen::VectorXd w = p.coords + c * x.coords;         // Minkowski length sinh d
      const double s = std::sqrt(std::max(minkowski_dot(w, w), 0.0));
      if (s > 1e-12) w *= d / s;
      return {x, std::move(w)};
    }
    case ManifoldKind::SpecialOrthogonal: {
      const int n = space.matrix_size();
      const Eigen::MatrixXd xm = as_matrix(x.coords, n);
      const Eigen::MatrixXd rel = xm.transpose() * as_matrix(p.coords, n);
      // log_rotation may throw; keep it out of the aggregate initializer
      Eigen::VectorXd coords = flatten(xm * so_detail::log_rotation(rel));
      return {x, std::move(coords)};
    }
  }
  throw InvalidInputError("log: unknown manifold kind");
}

double dist(const ModelSpace& space, const AmbientPoint& x, const AmbientPoint& p) {
  check_ambient(space, x, "dist");
  check_ambient(space, p, "dist");
  switch (space.kind) {
    case ManifoldKind::Euclidean:
      return (x.coords - p.coords).norm();
    case ManifoldKind::Sphere:
      return sphere_angle(x.coords, p.coords);
    case ManifoldKind::Hyperboloid:
      return hyperbolic_distance(x.coords, p.coords);
    case ManifoldKind::SpecialOrthogonal: {
      const int n = space.matrix_size();
      const Eigen::MatrixXd rel =
          as_matrix(x.coords, n).transpose() * as_matrix(p.coords, n);
      const Eigen::MatrixXd l = so_detail::log_rotation(rel);
      return space.norm_flavor == NormFlavor::Operator ? so_detail::operator_norm_skew(l)
                                                       : l.norm();
    }
  }
  throw InvalidInputError("dist: unknown manifold kind");
}

double inner(const ModelSpace& space, const AmbientPoint& x, const Eigen::VectorXd& a,
             const Eigen::VectorXd& b) {
  (void)x;
  if (space.kind == ManifoldKind::Hyperboloid) return minkowski_dot(a, b);
  return a.dot(b);  // trace inner product when coords are flattened matrices
}

double norm(const ModelSpace& space, const AmbientPoint& x, const Eigen::VectorXd& v) {
  if (space.kind == ManifoldKind::SpecialOrthogonal &&
      space.norm_flavor == NormFlavor::Operator) {
    const int n = space.matrix_size();
    Eigen::MatrixXd a = as_matrix(x.coords, n).transpose() * as_matrix(v, n);
    a = 0.5 * (a - a.transpose().eval());
    return so_detail::operator_norm_skew(a);
  }
  return std::sqrt(std::max(inner(space, x, v, v), 0.0));
}

Eigen::VectorXd project_tangent(const ModelSpace& space, const AmbientPoint& x,
                                const Eigen::VectorXd& w) {
  switch (space.kind) {
    case ManifoldKind::Euclidean:
      return w;
    case ManifoldKind::Sphere:
      return w - x.coords.dot(w) * x.coords;
    case ManifoldKind::Hyperboloid:
      return w + minkowski_dot(w, x.coords) * x.coords;
    case ManifoldKind::SpecialOrthogonal: {
      const int n = space.matrix_size();
      const Eigen::MatrixXd xm = as_matrix(x.coords, n);
      Eigen::MatrixXd a = xm.transpose() * as_matrix(w, n);
      a = 0.5 * (a - a.transpose().eval());
      return flatten(xm * a);
    }
  }
  throw InvalidInputError("project_tangent: unknown manifold kind");
}

std::vector<Eigen::VectorXd> tangent_basis(const ModelSpace& space, const AmbientPoint& x) {
  check_ambient(space, x, "tangent_basis");
  std::vector<Eigen::VectorXd> basis;
  basis.reserve(space.dim);

  if (space.kind == ManifoldKind::SpecialOrthogonal) {
    const int n = space.matrix_size();
    const Eigen::MatrixXd xm = as_matrix(x.coords, n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
        g(i, j) = inv_sqrt2;
        g(j, i) = -inv_sqrt2;
        basis.push_back(flatten(xm * g));
      }
    }
    return basis;
  }

  // Gram-Schmidt over projected ambient axes, deterministic order.
  const int ambient = space.ambient_size();
  for (int k = 0; k < ambient && static_cast<int>(basis.size()) < space.dim; ++k) {
    Eigen::VectorXd axis = Eigen::VectorXd::Zero(ambient);
    axis[k] = 1.0;
    Eigen::VectorXd u = project_tangent(space, x, axis);
    for (const auto& e : basis) u -= inner(space, x, u, e) * e;
    const double n2 = inner(space, x, u, u);
    if (n2 > 1e-16) basis.push_back(u / std::sqrt(n2));
  }
  if (static_cast<int>(basis.size()) != space.dim) {
    throw InvalidInputError("tangent_basis: failed to span the tangent space");
  }
  return basis;
}

Eigen::VectorXd parallel_transport(const ModelSpace& space, const AmbientPoint& from,
                                   const AmbientPoint& to, const Eigen::VectorXd& w) {
  check_ambient(space, from, "parallel_transport");
  check_ambient(space, to, "parallel_transport");
  switch (space.kind) {
    case ManifoldKind::Euclidean:
      return w;
    case ManifoldKind::Sphere: {
      TangentVector v = log(space, from, to);
      const double d = v.coords.norm();
      if (d < 1e-14) return w;
      const Eigen::VectorXd u = v.coords / d;
      const double a = u.dot(w);
      const Eigen::VectorXd velocity_at_to = -std::sin(d) * from.coords + std::cos(d) * u;
      return w - a * u + a * velocity_at_to;
    }
    case ManifoldKind::Hyperboloid: {
      TangentVector v = log(space, from, to);
      const double d = std::sqrt(std::max(minkowski_dot(v.coords, v.coords), 0.0));
      if (d < 1e-14) return w;
      const Eigen::VectorXd u = v.coords / d;
      const double a = minkowski_dot(u, w);
      const Eigen::VectorXd velocity_at_to = std::sinh(d) * from.coords + std::cosh(d) * u;
      return w - a * u + a * velocity_at_to;
    }
    case ManifoldKind::SpecialOrthogonal: {
      // along q(t) = from * expm(t*S): left-trivialized vectors rotate by
      // Ad_{expm(-S/2)}
      const int n = space.matrix_size();
      const Eigen::MatrixXd fm = as_matrix(from.coords, n);
      const Eigen::MatrixXd rel = fm.transpose() * as_matrix(to.coords, n);
      const Eigen::MatrixXd s = so_detail::log_rotation(rel);
      Eigen::MatrixXd b = fm.transpose() * as_matrix(w, n);
      b = 0.5 * (b - b.transpose().eval());
      const Eigen::MatrixXd half = so_detail::exp_skew((0.5 * s).eval());
      return flatten(as_matrix(to.coords, n) * (half.transpose() * b * half));
    }
  }
  throw InvalidInputError("parallel_transport: unknown manifold kind");
}

CurvatureData curvature_data(const ModelSpace& space) {
  switch (space.kind) {
    case ManifoldKind::Euclidean: return {0.0, 0.0, kInf};
    case ManifoldKind::Sphere: return {1.0, 1.0, M_PI};
    case ManifoldKind::Hyperboloid: return {-1.0, -1.0, kInf};
    case ManifoldKind::SpecialOrthogonal:
      // Bi-invariant metric in the tr(A^T B) normalization. kappa_max = 1/4 is
      // a numerically validated upper bound (the observed maximum sectional
      // curvature is 1/8); the closure of planar geodesics at pi*sqrt(2)
      // pins the injectivity radius.
      return {0.0, 0.25, M_PI * std::sqrt(2.0)};
  }
  return {};
}

double admissible_radius(const ModelSpace& space) {
  const CurvatureData c = curvature_data(space);
  double r = 0.5 * c.injectivity_radius;
  if (c.kappa_max > 0.0) r = std::min(r, M_PI / (4.0 * std::sqrt(c.kappa_max)));
  if (space.kind == ManifoldKind::SpecialOrthogonal &&
      space.norm_flavor == NormFlavor::Operator) {
    r *= 0.5 * M_PI;
  }
  return r;
}

Isometry identity_isometry(const ModelSpace& space) {
  Isometry g;
  g.kind = space.kind;
  const int ambient = space.ambient_size();
  switch (space.kind) {
    case ManifoldKind::Euclidean:
      g.a = Eigen::MatrixXd::Identity(ambient, ambient);
      g.translation = Eigen::VectorXd::Zero(ambient);
      break;
    case ManifoldKind::Sphere:
    case ManifoldKind::Hyperboloid:
      g.a = Eigen::MatrixXd::Identity(ambient, ambient);
      break;
    case ManifoldKind::SpecialOrthogonal: {
      const int n = space.matrix_size();
      g.a = Eigen::MatrixXd::Identity(n, n);
      g.b = Eigen::MatrixXd::Identity(n, n);
      break;
    }
  }
  return g;
}

std::optional<std::string> validate_isometry(const ModelSpace& space, const Isometry& g) {
  if (g.kind != space.kind) return "isometry tagged for a different manifold";
  const auto orthogonal_residual = [](const Eigen::MatrixXd& m) {
    return (m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).norm();
  };
  switch (space.kind) {
    case ManifoldKind::Euclidean: {
      if (g.a.rows() != space.dim || g.a.cols() != space.dim) return "matrix size mismatch";
      if (g.translation.size() != space.dim) return "translation size mismatch";
      const double r = orthogonal_residual(g.a);
      if (r > 1e-10) return describe(r, "matrix is not orthogonal");
      return std::nullopt;
    }
    case ManifoldKind::Sphere: {
      const int ambient = space.ambient_size();
      if (g.a.rows() != ambient || g.a.cols() != ambient) return "matrix size mismatch";
      const double r = orthogonal_residual(g.a);
      if (r > 1e-10) return describe(r, "matrix is not orthogonal");
      return std::nullopt;
    }
    case ManifoldKind::Hyperboloid: {
      const int ambient = space.ambient_size();
      if (g.a.rows() != ambient || g.a.cols() != ambient) return "matrix size mismatch";
      Eigen::MatrixXd j = Eigen::MatrixXd::Identity(ambient, ambient);
      j(0, 0) = -1.0;
      const double r = (g.a.transpose() * j * g.a - j).norm();
      if (r > 1e-10) return describe(r, "matrix does not preserve the Minkowski form");
      if (g.a(0, 0) <= 0.0) return describe(g.a(0, 0), "time orientation not preserved");
      return std::nullopt;
    }
    case ManifoldKind::SpecialOrthogonal: {
      const int n = space.matrix_size();
      if (g.a.rows() != n || g.a.cols() != n || g.b.rows() != n || g.b.cols() != n) {
        return "matrix size mismatch";
      }
      const double ra = orthogonal_residual(g.a);
      if (ra > 1e-10) return describe(ra, "left factor is not orthogonal");
      const double rb = orthogonal_residual(g.b);
      if (rb > 1e-10) return describe(rb, "right factor is not orthogonal");
      if (g.a.determinant() <= 0.0 || g.b.determinant() <= 0.0) {
        return "factors must be rotations (positive determinant)";
      }
      return std::nullopt;
    }
  }
  return "unknown manifold kind";
}

AmbientPoint apply_isometry(const ModelSpace& space, const Isometry& g, const AmbientPoint& q) {
  if (auto bad = validate_isometry(space, g)) {
    throw InvalidInputError("apply_isometry: " + *bad);
  }
  check_ambient(space, q, "apply_isometry");
  switch (space.kind) {
    case ManifoldKind::Euclidean:
      return {g.a * q.coords + g.translation, space.kind};
    case ManifoldKind::Sphere:
    case ManifoldKind::Hyperboloid:
      return {g.a * q.coords, space.kind};
    case ManifoldKind::SpecialOrthogonal: {
      const int n = space.matrix_size();
      return {flatten(g.a * as_matrix(q.coords, n) * g.b), space.kind};
    }
  }
  throw InvalidInputError("apply_isometry: unknown manifold kind");
}

Eigen::VectorXd apply_isometry_tangent(const ModelSpace& space, const Isometry& g,
                                       const Eigen::VectorXd& v) {
  switch (space.kind) {
    case ManifoldKind::Euclidean:
    case ManifoldKind::Sphere:
    case ManifoldKind::Hyperboloid:
      return g.a * v;
    case ManifoldKind::SpecialOrthogonal: {
      const int n = space.matrix_size();
      return flatten(g.a * as_matrix(v, n) * g.b);
    }
  }
  throw InvalidInputError("apply_isometry_tangent: unknown manifold kind");
}

AmbientPoint random_point_in_ball(const ModelSpace& space, const AmbientPoint& center, double r,
                                  std::uint64_t seed) {
  check_ambient(space, center, "random_point_in_ball");
  if (!(r > 0.0)) throw InvalidInputError("random_point_in_ball: radius must be positive");
  if (r > admissible_radius(space) * (1.0 + 1e-12)) {
    throw InvalidInputError("random_point_in_ball: radius exceeds the admissible radius");
  }
  Rng rng(seed);
  const auto basis = tangent_basis(space, center);
  Eigen::VectorXd g;
  double gn = 0.0;
  do {
    g = rng.normal_vector(space.dim);
    gn = g.norm();
  } while (gn < 1e-12);
  const double radius = r * std::pow(rng.uniform01(), 1.0 / space.dim);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(space.ambient_size());
  for (int i = 0; i < space.dim; ++i) v += (radius * g[i] / gn) * basis[i];
  return exp(space, center, v);
}

}  // namespace rcm
