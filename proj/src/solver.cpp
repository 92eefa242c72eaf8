#include "rcm/solver.hpp"

#include <cmath>

namespace rcm {
namespace {

constexpr double kMinStepScale = 0x1.0p-20;
constexpr double kBallSlack = 1e-12;

void validate_config(const SolverConfig& config) {
  if (!(config.tolerance > 0.0)) throw InvalidInputError("solver: tolerance must be positive");
  if (config.max_iterations < 0) throw InvalidInputError("solver: max_iterations must be >= 0");
  if (!(config.step_scale > 0.0) || config.step_scale > 1.0) {
    throw InvalidInputError("solver: step_scale must lie in (0, 1]");
  }
  if (config.ball_radius_override && !(*config.ball_radius_override > 0.0)) {
    throw InvalidInputError("solver: ball radius override must be positive");
  }
}

}  // namespace

const char* to_string(BallCheck mode) {
  switch (mode) {
    case BallCheck::Enforce: return "enforce";
    case BallCheck::Warn: return "warn";
    case BallCheck::Skip: return "skip";
  }
  return "unknown";
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIterationsReached: return "max_iterations_reached";
    case SolveStatus::BallViolation: return "ball_violation";
    case SolveStatus::CutLocus: return "cut_locus";
  }
  return "unknown";
}

int exit_code_for(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged: return 0;
    case SolveStatus::BallViolation: return 2;
    case SolveStatus::CutLocus: return 3;
    case SolveStatus::MaxIterationsReached: return 4;
  }
  return 1;
}

AmbientPoint initial_guess(const ModelSpace& space, const WeightedSample& sample) {
  if (sample.empty()) throw InvalidInputError("initial_guess: empty sample");
  std::size_t best = 0;
  double best_value = frechet_value(space, sample, sample.points[0]);
  for (std::size_t i = 1; i < sample.size(); ++i) {
    const double value = frechet_value(space, sample, sample.points[i]);
    if (value < best_value) {
      best = i;
      best_value = value;
    }
  }
  return sample.points[best];
}

BallReport check_admissible_ball(const ModelSpace& space, const WeightedSample& sample,
                                 const AmbientPoint& center_guess,
                                 std::optional<double> radius_override) {
  BallReport report;
  report.radius_used = radius_override.value_or(admissible_radius(space));
  report.max_point_distance = 0.0;
  for (const auto& p : sample.points) {
    report.max_point_distance = std::max(report.max_point_distance, dist(space, center_guess, p));
  }
  report.ok = report.max_point_distance <= report.radius_used;
  return report;
}

AmbientPoint euler_step(const ModelSpace& space, const WeightedSample& sample,
                        const AmbientPoint& x, double step_scale) {
  const TangentVector v = mass_vector_field(space, sample, x);
  return exp(space, x, step_scale * v.coords);
}

ConvergenceReport solve_field(const ModelSpace& space, const FieldFn& field, const CostFn& cost,
                              const SolverConfig& config, const AmbientPoint& x0,
                              const std::optional<BallGuard>& guard) {
  validate_config(config);
  ConvergenceReport report;
  AmbientPoint x = x0;
  report.center = x;

  if (guard && guard->mode != BallCheck::Skip) {
    const double excursion = dist(space, x, guard->center);
    if (excursion > guard->radius + kBallSlack) {
      if (guard->mode == BallCheck::Enforce) {
        report.status = SolveStatus::BallViolation;
        return report;
      }
      report.ball_warnings += 1;
    }
  }

  // Working step scale. Halvings persist across iterations: retrying the
  // configured scale each iteration livelocks at the slack floor when -DV has
  // eigenvalues above 2, which happens for spreads far outside the admissible
  // ball (an accepted noise-level increase then expands the iterate error).
  // Inside the admissible ball the scale never leaves config.step_scale.
  double working_scale = config.step_scale;

  for (int k = 0;; ++k) {
    TangentVector v{x, Eigen::VectorXd()};
    try {
      v = field(x);
    } catch (const CutLocusError&) {
      report.status = SolveStatus::CutLocus;
      report.iterations = k;
      report.center = x;
      return report;
    }
    const double gradient_norm = norm(space, x, v.coords);
    const double cost_here = cost(x);
    report.trace.push_back({k, gradient_norm, cost_here});
    report.iterates.push_back(x);

    if (gradient_norm <= config.tolerance) {
      report.status = SolveStatus::Converged;
      report.iterations = k;
      report.center = x;
      return report;
    }
    if (k == config.max_iterations) {
      report.status = SolveStatus::MaxIterationsReached;
      report.iterations = k;
      report.center = x;
      return report;
    }

    // Euler step; halve while the cost increases, give up at scale 2^-20.
    // The slack keeps one-ulp rounding noise from triggering the guard once
    // the per-step decrease falls below the representable resolution of f.
    const double slack = 1e-14 * std::max(1.0, std::abs(cost_here));
    double scale = working_scale;
    AmbientPoint y = x;
    bool accepted = false;
    while (true) {
      try {
        y = exp(space, x, scale * v.coords);
      } catch (const CutLocusError&) {
        report.status = SolveStatus::CutLocus;
        report.iterations = k;
        report.center = x;
        return report;
      }
      if (cost(y) <= cost_here + slack) {
        accepted = true;
        working_scale = scale;
        break;
      }
      report.step_halvings += 1;
      scale *= 0.5;
      if (scale < kMinStepScale) break;
    }
    if (!accepted) {
      report.status = SolveStatus::MaxIterationsReached;
      report.iterations = k;
      report.center = x;
      return report;
    }

    if (guard && guard->mode != BallCheck::Skip) {
      const double excursion = dist(space, y, guard->center);
      if (excursion > guard->radius + kBallSlack) {
        if (guard->mode == BallCheck::Enforce) {
          report.status = SolveStatus::BallViolation;
          report.iterations = k + 1;
          report.center = y;
          report.iterates.push_back(y);
          return report;
        }
        report.ball_warnings += 1;
      }
    }
    x = y;
  }
}

ConvergenceReport solve_center(const ModelSpace& space, const WeightedSample& sample,
                               const SolverConfig& config,
                               const std::optional<AmbientPoint>& x0) {
  validate_config(config);
  const AmbientPoint guess = initial_guess(space, sample);

  std::optional<BallGuard> guard;
  bool sample_outside_ball = false;
  if (config.ball_check != BallCheck::Skip) {
    const BallReport ball =
        check_admissible_ball(space, sample, guess, config.ball_radius_override);
    if (!ball.ok && config.ball_check == BallCheck::Enforce) {
      ConvergenceReport report;
      report.status = SolveStatus::BallViolation;
      report.center = x0.value_or(guess);
      return report;
    }
    sample_outside_ball = !ball.ok;
    guard = BallGuard{guess, ball.radius_used, config.ball_check};
  }

  const AmbientPoint start = x0.value_or(guess);
  const FieldFn field = [&](const AmbientPoint& x) {
    return mass_vector_field(space, sample, x);
  };
  // V is the gradient flow of the Riemannian (Frobenius) Fréchet function, so
  // the descent guard always measures that cost; the Operator flavor enters
  // only through the stopping norm and the ball radii.
  ModelSpace riemannian = space;
  riemannian.norm_flavor = NormFlavor::Frobenius;
  const CostFn cost = [&, riemannian](const AmbientPoint& x) {
    return frechet_value(riemannian, sample, x);
  };
  ConvergenceReport report = solve_field(space, field, cost, config, start, guard);
  if (sample_outside_ball) report.ball_warnings += 1;
  return report;
}

}  // namespace rcm
