#pragma once

#include <optional>
#include <string>

#include "rcm/model_space.hpp"
#include "rcm/oracle.hpp"
#include "rcm/solver.hpp"
#include "rcm/types.hpp"

namespace rcm {

/// A problem file: manifold, points, optional masses (default uniform) and
/// optional solver settings.
struct ProblemSpec {
  ModelSpace space;
  WeightedSample sample;
  SolverConfig solver;
};

/// Parse a problem from JSON text. `name` prefixes error messages; parse and
/// validation failures throw InvalidInputError with line or JSON-pointer
/// references.
ProblemSpec parse_problem(const std::string& text, const std::string& name);
ProblemSpec load_problem(const std::string& path);

/// Shortest-of-17-significant-digits decimal form, round-trip exact.
std::string format_double(double value);
std::string format_vector(const Eigen::VectorXd& v);

std::optional<BallCheck> ball_check_from_string(const std::string& text);

/// {"center":..., "status":..., "iterations":..., "gradient_norm":...,
///  "frechet_value":...}; the last two are null when not computable (e.g. the
/// field is undefined at the final point).
std::string mean_result_json(const ConvergenceReport& report,
                             std::optional<double> gradient_norm,
                             std::optional<double> frechet);

std::string trace_csv(const ConvergenceReport& report);

struct CompareEntry {
  std::string label;
  AmbientPoint center;
  std::optional<std::string> status;  // iterative centers only
};

std::string compare_result_json(const ModelSpace& space, const WeightedSample& sample,
                                const std::vector<CompareEntry>& centers);

std::string oracle_result_json(const OracleResult& oracle, const ConvergenceReport& solver_report,
                               double distance);

}  // namespace rcm
