#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rcm/field.hpp"
#include "rcm/model_space.hpp"
#include "rcm/types.hpp"

namespace rcm {

enum class BallCheck { Enforce, Warn, Skip };
enum class SolveStatus { Converged, MaxIterationsReached, BallViolation, CutLocus };

const char* to_string(BallCheck mode);
const char* to_string(SolveStatus status);
/// CLI exit code for a status: 0 converged, 2 ball violation, 3 cut locus,
/// 4 max iterations.
int exit_code_for(SolveStatus status);

struct SolverConfig {
  double tolerance = 1e-10;  // gradient-norm stopping threshold
  int max_iterations = 1000;
  double step_scale = 1.0;  // full Euler step by default
  BallCheck ball_check = BallCheck::Enforce;
  std::optional<double> ball_radius_override;
};

struct TraceEntry {
  int iteration;
  double gradient_norm;
  double frechet_value;
};

struct BallReport {
  double radius_used = 0.0;
  double max_point_distance = 0.0;
  bool ok = false;
};

struct ConvergenceReport {
  SolveStatus status = SolveStatus::MaxIterationsReached;
  int iterations = 0;
  std::vector<TraceEntry> trace;  // one entry per visited iterate
  AmbientPoint center;            // last iterate
  std::vector<AmbientPoint> iterates;
  int step_halvings = 0;  // divergence-guard events
  int ball_warnings = 0;  // containment misses observed in Warn mode
};

/// The sample point minimizing the Fréchet function, ties to the lowest index.
AmbientPoint initial_guess(const ModelSpace& space, const WeightedSample& sample);

/// ok iff every sample point lies within the admissible radius of the guess.
BallReport check_admissible_ball(const ModelSpace& space, const WeightedSample& sample,
                                 const AmbientPoint& center_guess,
                                 std::optional<double> radius_override = std::nullopt);

/// x <- exp_x(step_scale * V(x)).
AmbientPoint euler_step(const ModelSpace& space, const WeightedSample& sample,
                        const AmbientPoint& x, double step_scale);

/// Iterated Euler steps on the averaged-log field until the gradient norm
/// drops below tolerance. Cut-locus hits and ball violations are encoded in
/// the report status rather than thrown.
ConvergenceReport solve_center(const ModelSpace& space, const WeightedSample& sample,
                               const SolverConfig& config = {},
                               const std::optional<AmbientPoint>& x0 = std::nullopt);

using FieldFn = std::function<TangentVector(const AmbientPoint&)>;
using CostFn = std::function<double(const AmbientPoint&)>;

struct BallGuard {
  AmbientPoint center;
  double radius = 0.0;
  BallCheck mode = BallCheck::Skip;
};

/// Generic Euler loop shared by the Fréchet-gradient and cos-adapted solvers: one loop,
/// pluggable field and cost. The divergence guard halves the step while the
/// cost increases and gives up below scale 2^-20.
ConvergenceReport solve_field(const ModelSpace& space, const FieldFn& field, const CostFn& cost,
                              const SolverConfig& config, const AmbientPoint& x0,
                              const std::optional<BallGuard>& guard = std::nullopt);

}  // namespace rcm
