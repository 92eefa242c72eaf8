#pragma once

#include "rcm/field.hpp"
#include "rcm/model_space.hpp"
#include "rcm/types.hpp"

namespace rcm {

/// Exhaustive-search parameters: a normal-coordinate lattice with `resolution`
/// points per tangent axis inside [-search_radius, search_radius], centered at
/// center_hint.
struct OracleGrid {
  int resolution = 64;  // at least 16
  double search_radius = 0.0;
  AmbientPoint center_hint;
};

struct OracleResult {
  AmbientPoint point;
  double f_value = 0.0;
  double resolution_bound = 0.0;  // lattice spacing after refinement
};

/// True if grid_oracle_center supports the space (intrinsic dimension <= 3:
/// Euclidean R^1..R^3, S^2, H^2, SO(3)).
bool oracle_supports(const ModelSpace& space);

/// Brute-force Fréchet minimization: coarse lattice pass, then one refinement
/// pass around the best cell. Independent of the solver's logic; ties break to
/// the lowest lattice index.
OracleResult grid_oracle_center(const ModelSpace& space, const WeightedSample& sample,
                                const OracleGrid& grid);

/// Max over the deterministic tangent basis of |central difference of f along
/// exp_x(t u) - (-<V(x), u>)|. Requires h in [1e-6, 1e-3].
double gradient_check(const ModelSpace& space, const WeightedSample& sample,
                      const AmbientPoint& x, double h);

}  // namespace rcm
