#include "rcm/field.hpp"

#include <string>

#include "rcm/summation.hpp"

namespace rcm {

TangentVector mass_vector_field(const ModelSpace& space, const WeightedSample& sample,
                                const AmbientPoint& x) {
  if (sample.empty()) throw InvalidInputError("mass_vector_field: empty sample");
  Eigen::VectorXd total = pairwise_sum(sample.size(), [&](std::size_t i) -> Eigen::VectorXd {
    try {
      return sample.masses[i] * log(space, x, sample.points[i]).coords;
    } catch (const CutLocusError& e) {
      throw CutLocusError(std::string(e.what()) + " [sample point " + std::to_string(i) + "]",
                          static_cast<int>(i));
    }
  });
  return {x, std::move(total)};
}

double frechet_value(const ModelSpace& space, const WeightedSample& sample,
                     const AmbientPoint& x) {
  if (sample.empty()) throw InvalidInputError("frechet_value: empty sample");
  const double sum = pairwise_sum(sample.size(), [&](std::size_t i) {
    const double d = dist(space, x, sample.points[i]);
    return sample.masses[i] * d * d;
  });
  return 0.5 * sum;
}

Eigen::MatrixXd numerical_covariant_differential(const ModelSpace& space,
                                                 const WeightedSample& sample,
                                                 const AmbientPoint& x, double h) {
  if (!(h > 0.0) || h > 1e-3) {
    throw InvalidInputError("numerical_covariant_differential: h must lie in (0, 1e-3]");
  }
  const auto basis = tangent_basis(space, x);
  const Eigen::VectorXd vx = mass_vector_field(space, sample, x).coords;
  Eigen::MatrixXd dv(space.dim, space.dim);
  for (int j = 0; j < space.dim; ++j) {
    const AmbientPoint y = exp(space, x, h * basis[j]);
    const Eigen::VectorXd vy = mass_vector_field(space, sample, y).coords;
    const Eigen::VectorXd pulled = parallel_transport(space, y, x, vy);
    const Eigen::VectorXd column = (pulled - vx) / h;
    for (int i = 0; i < space.dim; ++i) dv(i, j) = inner(space, x, basis[i], column);
  }
  return dv;
}

}  // namespace rcm
