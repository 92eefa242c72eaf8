// rcm: Riemannian center-of-mass solver for the model spaces.
//
//   rcm mean problem.json [--trace out.csv] [--step-scale X] [--tolerance E]
//                         [--ball-check enforce|warn|skip]
//   rcm compare problem.json [solver flags]
//   rcm oracle problem.json [--resolution N] [solver flags]
//
// Exit codes: 0 converged, 1 input error, 2 ball violation, 3 cut locus,
// 4 iteration budget exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rcm/closed_form.hpp"
#include "rcm/problem_io.hpp"

namespace {

struct SolverFlags {
  std::optional<double> step_scale;
  std::optional<double> tolerance;
  std::optional<std::string> ball_check;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--step-scale", flags.step_scale, "Euler step scale in (0, 1]");
  cmd->add_option("--tolerance", flags.tolerance, "gradient-norm stopping threshold");
  cmd->add_option("--ball-check", flags.ball_check, "admissible-ball mode: enforce, warn or skip");
}

void apply_flags(const SolverFlags& flags, rcm::SolverConfig& config) {
  if (flags.step_scale) config.step_scale = *flags.step_scale;
  if (flags.tolerance) config.tolerance = *flags.tolerance;
  if (flags.ball_check) {
    const auto mode = rcm::ball_check_from_string(*flags.ball_check);
    if (!mode) throw rcm::InvalidInputError("--ball-check: expected enforce, warn or skip");
    config.ball_check = *mode;
  }
}

std::optional<double> final_gradient_norm(const rcm::ModelSpace& space,
                                          const rcm::WeightedSample& sample,
                                          const rcm::AmbientPoint& center) {
  try {
    const rcm::TangentVector v = rcm::mass_vector_field(space, sample, center);
    return rcm::norm(space, center, v.coords);
  } catch (const rcm::CutLocusError&) {
    return std::nullopt;
  }
}

int run_mean(const std::string& path, const SolverFlags& flags,
             const std::optional<std::string>& trace_path) {
  rcm::ProblemSpec problem = rcm::load_problem(path);
  apply_flags(flags, problem.solver);

  const rcm::ConvergenceReport report =
      rcm::solve_center(problem.space, problem.sample, problem.solver);
  const std::optional<double> gradient =
      final_gradient_norm(problem.space, problem.sample, report.center);
  const double frechet = rcm::frechet_value(problem.space, problem.sample, report.center);

  std::cout << rcm::mean_result_json(report, gradient, frechet);
  if (trace_path) {
    std::ofstream out(*trace_path, std::ios::binary);
    if (!out) throw rcm::InvalidInputError(*trace_path + ": cannot open trace file for writing");
    out << rcm::trace_csv(report);
  }
  return rcm::exit_code_for(report.status);
}

int run_compare(const std::string& path, const SolverFlags& flags) {
  rcm::ProblemSpec problem = rcm::load_problem(path);
  apply_flags(flags, problem.solver);
  if (problem.space.kind != rcm::ManifoldKind::Sphere &&
      problem.space.kind != rcm::ManifoldKind::Hyperboloid) {
    throw rcm::InvalidInputError("compare: only sphere and hyperboloid are supported");
  }

  std::vector<rcm::CompareEntry> centers;
  const rcm::ConvergenceReport frechet =
      rcm::solve_center(problem.space, problem.sample, problem.solver);
  centers.push_back({"frechet", frechet.center, std::string(to_string(frechet.status))});

  if (problem.space.kind == rcm::ManifoldKind::Sphere) {
    centers.push_back({"embed_project", rcm::embed_project_center_sphere(problem.sample),
                       std::nullopt});
    const rcm::ConvergenceReport cos_report =
        rcm::cos_center_sphere(problem.sample, problem.solver);
    centers.push_back({"cos_adapted", cos_report.center, std::string(to_string(cos_report.status))});
  } else {
    centers.push_back({"embed_project", rcm::embed_project_center_hyperbolic(problem.sample),
                       std::nullopt});
  }

  std::cout << rcm::compare_result_json(problem.space, problem.sample, centers);
  return 0;
}

int run_oracle(const std::string& path, const SolverFlags& flags, int resolution) {
  rcm::ProblemSpec problem = rcm::load_problem(path);
  apply_flags(flags, problem.solver);
  if (!rcm::oracle_supports(problem.space)) {
    throw rcm::InvalidInputError("oracle: unsupported space (intrinsic dimension > 3)");
  }

  rcm::OracleGrid grid;
  grid.resolution = resolution;
  grid.center_hint = rcm::initial_guess(problem.space, problem.sample);
  double max_dist = 0.0;
  for (const auto& p : problem.sample.points) {
    max_dist = std::max(max_dist, rcm::dist(problem.space, grid.center_hint, p));
  }
  grid.search_radius =
      std::min(rcm::admissible_radius(problem.space), std::max(1e-3, 1.1 * max_dist + 1e-3));

  const rcm::OracleResult oracle = rcm::grid_oracle_center(problem.space, problem.sample, grid);
  const rcm::ConvergenceReport report =
      rcm::solve_center(problem.space, problem.sample, problem.solver);
  const double gap = rcm::dist(problem.space, oracle.point, report.center);

  std::cout << rcm::oracle_result_json(oracle, report, gap);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riemannian center of mass on model spaces"};
  app.require_subcommand(1);

  std::string spec_path;
  SolverFlags flags;
  std::optional<std::string> trace_path;
  int resolution = 64;

  CLI::App* mean = app.add_subcommand("mean", "solve for the center of mass");
  mean->add_option("spec", spec_path, "problem JSON file")->required();
  mean->add_option("--trace", trace_path, "write per-iteration CSV to this path");
  add_solver_flags(mean, flags);

  CLI::App* compare = app.add_subcommand(
      "compare", "compare the Fréchet-minimizing, embed-project and cos-adapted centers");
  compare->add_option("spec", spec_path, "problem JSON file")->required();
  add_solver_flags(compare, flags);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force grid check of the solver");
  oracle->add_option("spec", spec_path, "problem JSON file")->required();
  oracle->add_option("--resolution", resolution, "lattice points per tangent axis (>= 16)");
  add_solver_flags(oracle, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (mean->parsed()) return run_mean(spec_path, flags, trace_path);
    if (compare->parsed()) return run_compare(spec_path, flags);
    if (oracle->parsed()) return run_oracle(spec_path, flags, resolution);
  } catch (const std::exception& e) {
    std::cerr << "rcm: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
