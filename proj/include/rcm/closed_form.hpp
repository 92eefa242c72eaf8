#pragma once

#include "rcm/solver.hpp"
#include "rcm/types.hpp"

namespace rcm {

/// Weighted ambient mean of the sample points (fixed-order sum).
Eigen::VectorXd ambient_mean(const WeightedSample& sample);

/// Sphere center by embedding: mu / |mu| with mu the ambient mean. Throws
/// DegenerateMeanError when |mu| <= 1e-12 (balanced antipodal configurations).
AmbientPoint embed_project_center_sphere(const WeightedSample& sample);

/// Hyperboloid center by embedding: mu / sqrt(-<mu,mu>). The mean of upper
/// hyperboloid points is always timelike; anything else signals corruption.
AmbientPoint embed_project_center_hyperbolic(const WeightedSample& sample);

/// Negative gradient of sum_i m_i (1 - cos d(x, p_i)) on the sphere, which is
/// the tangential projection of the ambient mean: mu - <x,mu> x. Smooth
/// everywhere, antipodal points included.
TangentVector cos_adapted_field_sphere(const WeightedSample& sample, const AmbientPoint& x);

/// sum_i m_i (1 - cos d(x, p_i)) = 1 - <x, mu>.
double cos_adapted_cost_sphere(const WeightedSample& sample, const AmbientPoint& x);

/// Euler-iterates the cos-adapted field to its zero. The converged point
/// coincides with embed_project_center_sphere: minimizing the adapted cost
/// maximizes <x, mu> over the sphere.
ConvergenceReport cos_center_sphere(const WeightedSample& sample, const SolverConfig& config = {});

}  // namespace rcm
