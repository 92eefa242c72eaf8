#pragma once

#include <Eigen/Dense>

#include "rcm/model_space.hpp"
#include "rcm/types.hpp"

namespace rcm {

/// Averaged-logarithm field V(x) = sum_i m_i * log_x(p_i). Propagates
/// CutLocusError with the offending sample index attached.
TangentVector mass_vector_field(const ModelSpace& space, const WeightedSample& sample,
                                const AmbientPoint& x);

/// f(x) = 0.5 * sum_i m_i * d(x, p_i)^2; its gradient is -V.
double frechet_value(const ModelSpace& space, const WeightedSample& sample,
                     const AmbientPoint& x);

/// Finite-difference estimate of the covariant differential DV at x, expressed
/// in the deterministic orthonormal tangent basis: column j differences V at
/// exp_x(h e_j) pulled back by parallel transport. Requires 0 < h <= 1e-3.
Eigen::MatrixXd numerical_covariant_differential(const ModelSpace& space,
                                                 const WeightedSample& sample,
                                                 const AmbientPoint& x, double h);

}  // namespace rcm
