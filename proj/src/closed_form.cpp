#include "rcm/closed_form.hpp"

#include <cmath>
#include <sstream>

#include "rcm/summation.hpp"

namespace rcm {
namespace {

constexpr double kDegenerateMeanThreshold = 1e-12;

ModelSpace space_of(const WeightedSample& sample, ManifoldKind expected, const char* op) {
  if (sample.empty()) throw InvalidInputError(std::string(op) + ": empty sample");
  const auto& first = sample.points.front();
  if (first.manifold_tag != expected) {
    throw InvalidInputError(std::string(op) + ": sample is not on the expected manifold");
  }
  const int dim = static_cast<int>(first.coords.size()) - 1;
  return expected == ManifoldKind::Sphere ? ModelSpace::sphere(dim)
                                          : ModelSpace::hyperboloid(dim);
}

}  // namespace

Eigen::VectorXd ambient_mean(const WeightedSample& sample) {
  if (sample.empty()) throw InvalidInputError("ambient_mean: empty sample");
  return pairwise_sum(sample.size(), [&](std::size_t i) -> Eigen::VectorXd {
    return sample.masses[i] * sample.points[i].coords;
  });
}

AmbientPoint embed_project_center_sphere(const WeightedSample& sample) {
  space_of(sample, ManifoldKind::Sphere, "embed_project_center_sphere");
  const Eigen::VectorXd mu = ambient_mean(sample);
  const double n = mu.norm();
  if (n <= kDegenerateMeanThreshold) {
    std::ostringstream os;
    os << "ambient mean norm " << n << " is below 1e-12; no projection direction";
    throw DegenerateMeanError(os.str());
  }
  return {mu / n, ManifoldKind::Sphere};
}

AmbientPoint embed_project_center_hyperbolic(const WeightedSample& sample) {
  space_of(sample, ManifoldKind::Hyperboloid, "embed_project_center_hyperbolic");
  const Eigen::VectorXd mu = ambient_mean(sample);
  const double q = minkowski_dot(mu, mu);
  if (q >= 0.0) {
    throw std::logic_error("embed_project_center_hyperbolic: mean is not timelike (corrupt input)");
  }
  return {mu / std::sqrt(-q), ManifoldKind::Hyperboloid};
}

TangentVector cos_adapted_field_sphere(const WeightedSample& sample, const AmbientPoint& x) {
  space_of(sample, ManifoldKind::Sphere, "cos_adapted_field_sphere");
  const Eigen::VectorXd mu = ambient_mean(sample);
  return {x, mu - x.coords.dot(mu) * x.coords};
}

double cos_adapted_cost_sphere(const WeightedSample& sample, const AmbientPoint& x) {
  return pairwise_sum(sample.size(), [&](std::size_t i) {
    return sample.masses[i] * (1.0 - x.coords.dot(sample.points[i].coords));
  });
}

ConvergenceReport cos_center_sphere(const WeightedSample& sample, const SolverConfig& config) {
  const ModelSpace space = space_of(sample, ManifoldKind::Sphere, "cos_center_sphere");
  const Eigen::VectorXd mu = ambient_mean(sample);
  if (mu.norm() <= kDegenerateMeanThreshold) {
    throw DegenerateMeanError("cos_center_sphere: ambient mean norm is below 1e-12");
  }
  // near the zero the field contracts at rate |mu|, so the distance left at
  // stopping is about gradient_norm / |mu|; tie the tolerance to that rate to
  // keep the converged point within 1e-10 of the projected mean
  SolverConfig effective = config;
  effective.tolerance = std::min(config.tolerance, 5e-11 * mu.norm());

  std::size_t best = 0;
  double best_cost = cos_adapted_cost_sphere(sample, sample.points[0]);
  for (std::size_t i = 1; i < sample.size(); ++i) {
    const double cost = cos_adapted_cost_sphere(sample, sample.points[i]);
    if (cost < best_cost) {
      best = i;
      best_cost = cost;
    }
  }

  const FieldFn field = [&](const AmbientPoint& x) {
    return cos_adapted_field_sphere(sample, x);
  };
  const CostFn cost = [&](const AmbientPoint& x) { return cos_adapted_cost_sphere(sample, x); };
  return solve_field(space, field, cost, effective, sample.points[best]);
}

}  // namespace rcm
