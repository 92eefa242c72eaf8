#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "rcm/model_space.hpp"
#include "support/test_support.hpp"

using namespace rcm;

namespace {

Eigen::VectorXd vec3(double a, double b, double c) {
  Eigen::VectorXd v(3);
  v << a, b, c;
  return v;
}

Eigen::MatrixXd rot_z(double theta) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(3, 3);
  r(0, 0) = std::cos(theta);
  r(0, 1) = -std::sin(theta);
  r(1, 0) = std::sin(theta);
  r(1, 1) = std::cos(theta);
  return r;
}

Eigen::VectorXd flatten_row_major(const Eigen::MatrixXd& m) {
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = m;
  return Eigen::Map<const Eigen::VectorXd>(rm.data(), rm.size());
}

// independent oracle for the SO(3) geodesic distance: planar angles from the
// complex eigenvalues of the relative rotation
double so3_frobenius_distance_eig(const Eigen::MatrixXd& rel) {
  Eigen::EigenSolver<Eigen::MatrixXd> eig(rel);
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    const std::complex<double> lambda = eig.eigenvalues()[i];
    if (lambda.imag() > 0.0) {
      const double theta = std::atan2(lambda.imag(), lambda.real());
      sum += 2.0 * theta * theta;
    }
  }
  return std::sqrt(sum);
}

const std::vector<ModelSpace>& roundtrip_spaces() {
  static const std::vector<ModelSpace> spaces = {
      ModelSpace::euclidean(2),          ModelSpace::euclidean(3),
      ModelSpace::sphere(2),             ModelSpace::sphere(3),
      ModelSpace::hyperboloid(2),        ModelSpace::hyperboloid(3),
      ModelSpace::special_orthogonal(2), ModelSpace::special_orthogonal(3),
      ModelSpace::special_orthogonal(4), ModelSpace::special_orthogonal(5),
      ModelSpace::special_orthogonal(6), ModelSpace::special_orthogonal(7),
      ModelSpace::special_orthogonal(8)};
  return spaces;
}

}  // namespace

TEST_CASE("exp closed-form cases") {
  const ModelSpace s2 = ModelSpace::sphere(2);
  const AmbientPoint x{vec3(1, 0, 0), ManifoldKind::Sphere};
  const AmbientPoint y = exp(s2, x, vec3(0, M_PI / 2, 0));
  CHECK((y.coords - vec3(0, 1, 0)).norm() <= 1e-14);

  // zero vector is the identity on every space
  for (const ModelSpace& space : rcm::testing::standard_spaces()) {
    Rng rng(4001);
    const AmbientPoint p = rcm::testing::random_point(space, rng, 0.9);
    const AmbientPoint q = exp(space, p, Eigen::VectorXd::Zero(space.ambient_size()));
    CHECK((q.coords - p.coords).norm() <= 1e-15);
  }

  // SO(3): exp of the planar generator about z is Rz(theta)
  const ModelSpace so3 = ModelSpace::special_orthogonal(3);
  const AmbientPoint id = rcm::testing::base_point(so3);
  const double theta = 0.7;
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(3, 3);
  gen(0, 1) = -theta;
  gen(1, 0) = theta;
  const AmbientPoint r = exp(so3, id, flatten_row_major(gen));
  CHECK((r.coords - flatten_row_major(rot_z(theta))).norm() <= 1e-14);
}

TEST_CASE("log closed-form cases and cut locus") {
  const ModelSpace s2 = ModelSpace::sphere(2);
  const AmbientPoint x{vec3(1, 0, 0), ManifoldKind::Sphere};
  const TangentVector v = log(s2, x, {vec3(0, 0, 1), ManifoldKind::Sphere});
  CHECK((v.coords - vec3(0, 0, M_PI / 2)).norm() <= 1e-14);

  const ModelSpace h2 = ModelSpace::hyperboloid(2);
  const AmbientPoint apex{vec3(1, 0, 0), ManifoldKind::Hyperboloid};
  const TangentVector w =
      log(h2, apex, {vec3(std::cosh(1.0), std::sinh(1.0), 0), ManifoldKind::Hyperboloid});
  CHECK((w.coords - vec3(0, 1, 0)).norm() <= 1e-12);

  CHECK_THROWS_AS(log(s2, x, {vec3(-1, 0, 0), ManifoldKind::Sphere}), CutLocusError);

  // SO(3): rotation by pi is the cut locus
  const ModelSpace so3 = ModelSpace::special_orthogonal(3);
  const AmbientPoint id = rcm::testing::base_point(so3);
  const AmbientPoint half_turn{flatten_row_major(rot_z(M_PI)), ManifoldKind::SpecialOrthogonal};
  CHECK_THROWS_AS(log(so3, id, half_turn), CutLocusError);
}

TEST_CASE("dist closed-form cases") {
  const ModelSpace s2 = ModelSpace::sphere(2);
  CHECK(dist(s2, {vec3(1, 0, 0), ManifoldKind::Sphere}, {vec3(-1, 0, 0), ManifoldKind::Sphere}) ==
        doctest::Approx(M_PI).epsilon(1e-15));

  const ModelSpace h2 = ModelSpace::hyperboloid(2);
  CHECK(dist(h2, {vec3(1, 0, 0), ManifoldKind::Hyperboloid},
             {vec3(std::cosh(2.0), std::sinh(2.0), 0), ManifoldKind::Hyperboloid}) ==
        doctest::Approx(2.0).epsilon(1e-12));

  // SO(3) Frobenius distance against the eigen-decomposition oracle
  const ModelSpace so3 = ModelSpace::special_orthogonal(3);
  const AmbientPoint id = rcm::testing::base_point(so3);
  for (const double theta : {0.1, 0.5, 1.0, 2.0, 3.0}) {
    const AmbientPoint rz{flatten_row_major(rot_z(theta)), ManifoldKind::SpecialOrthogonal};
    const double d = dist(so3, id, rz);
    CHECK(d == doctest::Approx(theta * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(d == doctest::Approx(so3_frobenius_distance_eig(rot_z(theta))).epsilon(1e-12));
  }

  // operator flavor measures the largest planar angle
  const ModelSpace so3_op = ModelSpace::special_orthogonal(3, NormFlavor::Operator);
  const AmbientPoint rz{flatten_row_major(rot_z(1.2)), ManifoldKind::SpecialOrthogonal};
  CHECK(dist(so3_op, id, rz) == doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("roundtrip property: exp then log under 0.9 injectivity radius") {
  for (const ModelSpace& space : roundtrip_spaces()) {
    Rng rng(4100 + space.dim + 31 * static_cast<int>(space.kind));
    const double reach =
        std::min(0.9 * curvature_data(space).injectivity_radius, 10.0);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const AmbientPoint x = rcm::testing::random_point(space, rng, 1.0);
      const auto basis = tangent_basis(space, x);
      Eigen::VectorXd g = rng.normal_vector(space.dim);
      if (g.norm() < 1e-12) continue;
      g.normalize();
      const double t = rng.uniform(1e-3, reach);
      Eigen::VectorXd v = Eigen::VectorXd::Zero(space.ambient_size());
      for (int i = 0; i < space.dim; ++i) v += t * g[i] * basis[i];

      const AmbientPoint p = exp(space, x, v);
      CHECK_FALSE(validate_point(space, p).has_value());
      const TangentVector back = log(space, x, p);
      const AmbientPoint p2 = exp(space, x, back.coords);
      // points are compared as manifold points; on H^n ambient coordinates
      // grow like e^d and carry no absolute meaning
      CHECK(dist(space, p2, p) <= 1e-9);
      CHECK(std::abs(norm(space, x, back.coords) - dist(space, x, p)) <= 1e-10);
      ++checked;
    }
    CHECK(checked >= 999);
  }
}

TEST_CASE("geodesic speed: d(x, exp(x, t u)) = t") {
  for (const ModelSpace& space : roundtrip_spaces()) {
    Rng rng(4200 + space.dim + 31 * static_cast<int>(space.kind));
    const double reach = std::min(curvature_data(space).injectivity_radius, 10.0);
    for (int trial = 0; trial < 100; ++trial) {
      const AmbientPoint x = rcm::testing::random_point(space, rng, 1.0);
      const auto basis = tangent_basis(space, x);
      Eigen::VectorXd g = rng.normal_vector(space.dim);
      if (g.norm() < 1e-12) continue;
      g.normalize();
      const double t = rng.uniform(1e-3, 0.999 * reach);
      Eigen::VectorXd v = Eigen::VectorXd::Zero(space.ambient_size());
      for (int i = 0; i < space.dim; ++i) v += t * g[i] * basis[i];
      // frobenius speed: use the Riemannian norm flavor for the comparison
      ModelSpace frob = space;
      frob.norm_flavor = NormFlavor::Frobenius;
      CHECK(std::abs(dist(frob, x, exp(space, x, v)) - t) <= 1e-9);
    }
  }
}

TEST_CASE("tangent basis is orthonormal and spans") {
  for (const ModelSpace& space : roundtrip_spaces()) {
    Rng rng(4300 + space.dim);
    const AmbientPoint x = rcm::testing::random_point(space, rng, 1.2);
    const auto basis = tangent_basis(space, x);
    REQUIRE(static_cast<int>(basis.size()) == space.dim);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK_FALSE(validate_tangent(space, {x, basis[i]}).has_value());
      for (std::size_t j = 0; j <= i; ++j) {
        const double expected = i == j ? 1.0 : 0.0;
        CHECK(std::abs(inner(space, x, basis[i], basis[j]) - expected) <= 1e-12);
      }
    }
  }
}

TEST_CASE("parallel transport preserves inner products and geodesic velocity") {
  for (const ModelSpace& space : rcm::testing::standard_spaces()) {
    Rng rng(4400 + static_cast<int>(space.kind));
    for (int trial = 0; trial < 25; ++trial) {
      const AmbientPoint x = rcm::testing::random_point(space, rng, 0.8);
      const AmbientPoint y =
          random_point_in_ball(space, x, rcm::testing::ball_radius(space, 0.8), rng.next_u64());
      const auto basis = tangent_basis(space, x);
      Eigen::VectorXd a = Eigen::VectorXd::Zero(space.ambient_size());
      Eigen::VectorXd b = a;
      for (int i = 0; i < space.dim; ++i) {
        a += rng.normal() * basis[i];
        b += rng.normal() * basis[i];
      }
      const Eigen::VectorXd ta = parallel_transport(space, x, y, a);
      const Eigen::VectorXd tb = parallel_transport(space, x, y, b);
      CHECK_FALSE(validate_tangent(space, {y, ta}).has_value());
      CHECK(std::abs(inner(space, y, ta, tb) - inner(space, x, a, b)) <= 1e-10);

      // the velocity of the connecting geodesic transports onto itself
      const TangentVector v = log(space, x, y);
      const Eigen::VectorXd tv = parallel_transport(space, x, y, v.coords);
      const TangentVector w = log(space, y, x);
      CHECK((tv + w.coords).norm() <= 1e-9);
    }
  }
}

TEST_CASE("apply_isometry closed-form cases") {
  const ModelSpace s2 = ModelSpace::sphere(2);
  Isometry rot;
  rot.kind = ManifoldKind::Sphere;
  rot.a = rot_z(M_PI / 2);
  const AmbientPoint moved = apply_isometry(s2, rot, {vec3(1, 0, 0), ManifoldKind::Sphere});
  CHECK((moved.coords - vec3(0, 1, 0)).norm() <= 1e-15);

  const AmbientPoint fixed =
      apply_isometry(s2, identity_isometry(s2), {vec3(0, 0, 1), ManifoldKind::Sphere});
  CHECK((fixed.coords - vec3(0, 0, 1)).norm() == 0.0);

  // hyperbolic boost of rapidity s moves the apex along a geodesic
  const ModelSpace h2 = ModelSpace::hyperboloid(2);
  const double s = 0.8;
  Isometry boost;
  boost.kind = ManifoldKind::Hyperboloid;
  boost.a = Eigen::MatrixXd::Identity(3, 3);
  boost.a(0, 0) = std::cosh(s);
  boost.a(0, 1) = std::sinh(s);
  boost.a(1, 0) = std::sinh(s);
  boost.a(1, 1) = std::cosh(s);
  const AmbientPoint shifted = apply_isometry(h2, boost, {vec3(1, 0, 0), ManifoldKind::Hyperboloid});
  CHECK((shifted.coords - vec3(std::cosh(s), std::sinh(s), 0)).norm() <= 1e-12);

  // invalid payloads are rejected
  Isometry bad;
  bad.kind = ManifoldKind::Sphere;
  bad.a = 2.0 * Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(apply_isometry(s2, bad, {vec3(1, 0, 0), ManifoldKind::Sphere}), InvalidInputError);
}

TEST_CASE("isometries preserve distances and commute with log") {
  for (const ModelSpace& space : rcm::testing::standard_spaces()) {
    Rng rng(4500 + static_cast<int>(space.kind));
    for (int trial = 0; trial < 25; ++trial) {
      const Isometry g = rcm::testing::random_isometry(space, rng);
      CHECK_FALSE(validate_isometry(space, g).has_value());
      const AmbientPoint x = rcm::testing::random_point(space, rng, 0.8);
      const AmbientPoint p =
          random_point_in_ball(space, x, rcm::testing::ball_radius(space, 0.9), rng.next_u64());
      const AmbientPoint gx = apply_isometry(space, g, x);
      const AmbientPoint gp = apply_isometry(space, g, p);
      CHECK(std::abs(dist(space, gx, gp) - dist(space, x, p)) <= 1e-10);

      const TangentVector v = log(space, x, p);
      const Eigen::VectorXd pushed = apply_isometry_tangent(space, g, v.coords);
      const TangentVector direct = log(space, gx, gp);
      CHECK((pushed - direct.coords).norm() <= 1e-9);
    }
  }
}

TEST_CASE("SO(n) exp and log are identical across norm flavors") {
  const ModelSpace frob = ModelSpace::special_orthogonal(3, NormFlavor::Frobenius);
  const ModelSpace oper = ModelSpace::special_orthogonal(3, NormFlavor::Operator);
  Rng rng(4600);
  for (int trial = 0; trial < 50; ++trial) {
    const AmbientPoint x = rcm::testing::random_point(frob, rng, 1.5);
    const AmbientPoint p = random_point_in_ball(frob, x, 1.4, rng.next_u64());
    // bit-identical results: the connection does not depend on the metric
    const TangentVector va = log(frob, x, p);
    const TangentVector vb = log(oper, x, p);
    CHECK((va.coords - vb.coords).norm() == 0.0);
    const AmbientPoint ya = exp(frob, x, va.coords);
    const AmbientPoint yb = exp(oper, x, vb.coords);
    CHECK((ya.coords - yb.coords).norm() == 0.0);
  }
}

TEST_CASE("SO(4) log handles mixed planes: fixed plane, rotation plane, pi plane") {
  const ModelSpace so4 = ModelSpace::special_orthogonal(4);
  const AmbientPoint id = rcm::testing::base_point(so4);

  // one rotating plane, one fixed plane: the Schur form mixes a 2x2 rotation
  // block with two unit 1x1 blocks
  const double theta = 0.7;
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(4, 4);
  q(0, 0) = std::cos(theta);
  q(0, 1) = -std::sin(theta);
  q(1, 0) = std::sin(theta);
  q(1, 1) = std::cos(theta);
  const AmbientPoint p{flatten_row_major(q), ManifoldKind::SpecialOrthogonal};
  CHECK(dist(so4, id, p) == doctest::Approx(theta * std::sqrt(2.0)).epsilon(1e-12));
  const TangentVector v = log(so4, id, p);
  CHECK(dist(so4, exp(so4, id, v.coords), p) <= 1e-12);

  // a plane at exactly pi is the cut locus regardless of the other plane
  Eigen::MatrixXd half = Eigen::MatrixXd::Identity(4, 4);
  half(0, 0) = -1.0;
  half(1, 1) = -1.0;
  const AmbientPoint at_pi{flatten_row_major(half), ManifoldKind::SpecialOrthogonal};
  CHECK_THROWS_AS(log(so4, id, at_pi), CutLocusError);
}

TEST_CASE("sphere log works just short of the antipode and exp survives past pi") {
  const ModelSpace s2 = ModelSpace::sphere(2);
  const AmbientPoint x{vec3(1, 0, 0), ManifoldKind::Sphere};
  const auto basis = tangent_basis(s2, x);

  // theta = pi - 1e-6 is legal; the direction is still recoverable
  const double theta = M_PI - 1e-6;
  const AmbientPoint p = exp(s2, x, theta * basis[0]);
  const TangentVector v = log(s2, x, p);
  CHECK(std::abs(v.coords.norm() - theta) <= 1e-10);
  CHECK(dist(s2, exp(s2, x, v.coords), p) <= 1e-9);

  // beyond the injectivity radius exp still lands on the sphere, with the
  // distance wrapping back
  const AmbientPoint far = exp(s2, x, 4.0 * basis[0]);
  CHECK_FALSE(validate_point(s2, far).has_value());
  CHECK(dist(s2, x, far) == doctest::Approx(2 * M_PI - 4.0).epsilon(1e-12));
}

TEST_CASE("random_point_in_ball determinism and containment") {
  const ModelSpace s2 = ModelSpace::sphere(2);
  const AmbientPoint center{vec3(0, 0, 1), ManifoldKind::Sphere};

  const AmbientPoint a = random_point_in_ball(s2, center, 0.5, 12345);
  const AmbientPoint b = random_point_in_ball(s2, center, 0.5, 12345);
  CHECK((a.coords - b.coords).norm() == 0.0);

  double max_seen = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const AmbientPoint p = random_point_in_ball(s2, center, 0.5, 777000 + i);
    max_seen = std::max(max_seen, dist(s2, center, p));
  }
  CHECK(max_seen <= 0.5);
  CHECK(max_seen >= 0.4);  // the ball is actually filled

  // r -> 0 limit returns the center
  const AmbientPoint tiny = random_point_in_ball(s2, center, 1e-15, 5);
  CHECK(dist(s2, center, tiny) <= 1e-12);

  CHECK_THROWS_AS(random_point_in_ball(s2, center, 2.0, 1), InvalidInputError);
  CHECK_THROWS_AS(random_point_in_ball(s2, center, 0.0, 1), InvalidInputError);
}

TEST_CASE("curvature data and admissible radii") {
  CHECK(admissible_radius(ModelSpace::sphere(2)) == doctest::Approx(M_PI / 4));
  CHECK(std::isinf(admissible_radius(ModelSpace::euclidean(3))));
  CHECK(std::isinf(admissible_radius(ModelSpace::hyperboloid(2))));
  CHECK(admissible_radius(ModelSpace::special_orthogonal(3)) == doctest::Approx(M_PI / 2));
  CHECK(admissible_radius(ModelSpace::special_orthogonal(3, NormFlavor::Operator)) ==
        doctest::Approx(M_PI * M_PI / 4));
}

TEST_CASE("SO(3) geodesic closure pins the injectivity radius") {
  // along a unit-speed planar geodesic the distance to the start grows until
  // pi*sqrt(2) and comes back; half the closure distance matches the stored
  // injectivity radius
  const ModelSpace so3 = ModelSpace::special_orthogonal(3);
  const AmbientPoint id = rcm::testing::base_point(so3);
  const auto basis = tangent_basis(so3, id);
  const Eigen::VectorXd u = basis[0];

  const double inj = curvature_data(so3).injectivity_radius;
  CHECK(inj == doctest::Approx(M_PI * std::sqrt(2.0)));
  for (const double t : {0.5, 1.5, 3.0, inj - 1e-3}) {
    CHECK(dist(so3, id, exp(so3, id, t * u)) == doctest::Approx(t).epsilon(1e-9));
  }
  // beyond the cut point the distance wraps back
  const double over = inj + 0.3;
  CHECK(dist(so3, id, exp(so3, id, over * u)) == doctest::Approx(2 * inj - over).epsilon(1e-9));
}

TEST_CASE("SO(n) sectional curvature stays below the stored bound") {
  // K(X, Y) = |[X, Y]|^2 / 4 for orthonormal X, Y in the tr(A^T B) metric;
  // random 2-planes must respect kappa_max = 1/4 (observed maximum is 1/8)
  for (const int n : {3, 4, 5, 8}) {
    const ModelSpace so = ModelSpace::special_orthogonal(n);
    const AmbientPoint id = rcm::testing::base_point(so);
    const auto basis = tangent_basis(so, id);
    Rng rng(4700 + n);
    double max_k = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
      Eigen::VectorXd xa = Eigen::VectorXd::Zero(so.ambient_size());
      Eigen::VectorXd yb = xa;
      for (int i = 0; i < so.dim; ++i) {
        xa += rng.normal() * basis[i];
        yb += rng.normal() * basis[i];
      }
      xa /= xa.norm();
      yb -= xa.dot(yb) * xa;
      if (yb.norm() < 1e-8) continue;
      yb /= yb.norm();
      const int sz = so.matrix_size();
      using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
      const Eigen::MatrixXd ax = Eigen::Map<const RowMajor>(xa.data(), sz, sz);
      const Eigen::MatrixXd ay = Eigen::Map<const RowMajor>(yb.data(), sz, sz);
      const Eigen::MatrixXd bracket = ax * ay - ay * ax;
      max_k = std::max(max_k, 0.25 * bracket.squaredNorm());
    }
    CHECK(max_k <= 0.25 + 1e-12);
    if (n == 3) CHECK(max_k >= 0.05);  // the so(3) planes sit near 1/8
  }
}
