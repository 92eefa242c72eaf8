#pragma once

#include <vector>

#include "rcm/model_space.hpp"
#include "rcm/rng.hpp"
#include "rcm/types.hpp"

namespace rcm::testing {

/// Canonical base point: origin, first ambient axis, hyperboloid apex, or the
/// identity rotation.
AmbientPoint base_point(const ModelSpace& space);

/// exp from the base point of a uniformly sampled tangent ball of the given
/// radius. Spread may exceed the admissible radius (unlike
/// random_point_in_ball) but must stay below the injectivity radius.
AmbientPoint random_point(const ModelSpace& space, Rng& rng, double spread);

/// k points seeded from rng, drawn uniformly from the ball of radius r around
/// center, with random masses normalized to 1.
WeightedSample random_sample_in_ball(const ModelSpace& space, const AmbientPoint& center,
                                     double r, int k, Rng& rng);

Isometry random_isometry(const ModelSpace& space, Rng& rng);

/// scale * min(admissible radius, cap): a finite sampling radius even on the
/// flat and hyperbolic spaces where the admissible radius is infinite.
double ball_radius(const ModelSpace& space, double scale = 1.0, double cap = 1.5);

/// The spaces exercised by the cross-space suites: R^3, S^2, H^2, SO(3).
std::vector<ModelSpace> standard_spaces();

}  // namespace rcm::testing
