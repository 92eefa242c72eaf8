#include "rcm/oracle.hpp"

#include <cmath>
#include <vector>

namespace rcm {
namespace {

struct PassResult {
  AmbientPoint best;
  double f = 0.0;
  double spacing = 0.0;
};

// One lattice sweep: resolution points per axis on [-radius, radius] in the
// tangent basis at center; row-major scan keeps the tie-break at the lowest
// lattice index.
PassResult lattice_pass(const ModelSpace& space, const WeightedSample& sample,
                        const AmbientPoint& center, double radius, int resolution) {
  const auto basis = tangent_basis(space, center);
  const int d = space.dim;
  const double spacing = 2.0 * radius / (resolution - 1);

  PassResult result{center, frechet_value(space, sample, center), spacing};
  bool have_best = false;

  std::vector<int> index(d, 0);
  Eigen::VectorXd u(space.ambient_size());
  while (true) {
    u.setZero();
    for (int k = 0; k < d; ++k) u += (-radius + index[k] * spacing) * basis[k];
    const AmbientPoint p = exp(space, center, u);
    const double f = frechet_value(space, sample, p);
    if (!have_best || f < result.f) {
      result.best = p;
      result.f = f;
      have_best = true;
    }
    // advance the multi-index, last axis fastest
    int axis = d - 1;
    while (axis >= 0) {
      if (++index[axis] < resolution) break;
      index[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
  }
  return result;
}

}  // namespace

bool oracle_supports(const ModelSpace& space) {
  switch (space.kind) {
    case ManifoldKind::Euclidean: return space.dim <= 3;
    case ManifoldKind::Sphere:
    case ManifoldKind::Hyperboloid: return space.dim == 2;
    case ManifoldKind::SpecialOrthogonal: return space.matrix_size() == 3;
  }
  return false;
}

OracleResult grid_oracle_center(const ModelSpace& space, const WeightedSample& sample,
                                const OracleGrid& grid) {
  if (!oracle_supports(space)) {
    throw InvalidInputError("grid_oracle_center: unsupported space (intrinsic dim > 3)");
  }
  if (grid.resolution < 16) {
    throw InvalidInputError("grid_oracle_center: resolution must be at least 16");
  }
  if (!(grid.search_radius > 0.0)) {
    throw InvalidInputError("grid_oracle_center: search radius must be positive");
  }
  if (grid.search_radius > admissible_radius(space) * (1.0 + 1e-9)) {
    throw InvalidInputError("grid_oracle_center: search radius exceeds the admissible radius");
  }

  const PassResult coarse =
      lattice_pass(space, sample, grid.center_hint, grid.search_radius, grid.resolution);
  // refine around the best cell: the continuous minimizer is within one coarse
  // spacing per axis of the lattice minimizer by convexity
  const PassResult fine =
      lattice_pass(space, sample, coarse.best, coarse.spacing, grid.resolution);

  OracleResult result;
  result.point = fine.f <= coarse.f ? fine.best : coarse.best;
  result.f_value = std::min(fine.f, coarse.f);
  result.resolution_bound = fine.spacing;
  return result;
}

double gradient_check(const ModelSpace& space, const WeightedSample& sample,
                      const AmbientPoint& x, double h) {
  if (!(h >= 1e-6) || !(h <= 1e-3)) {
    throw InvalidInputError("gradient_check: h must lie in [1e-6, 1e-3]");
  }
  const auto basis = tangent_basis(space, x);
  const Eigen::VectorXd v = mass_vector_field(space, sample, x).coords;
  double worst = 0.0;
  for (const auto& u : basis) {
    const double forward = frechet_value(space, sample, exp(space, x, h * u));
    const double backward = frechet_value(space, sample, exp(space, x, (-h) * u));
    const double numeric = (forward - backward) / (2.0 * h);
    const double analytic = -inner(space, x, v, u);
    worst = std::max(worst, std::abs(numeric - analytic));
  }
  return worst;
}

}  // namespace rcm
