#include <doctest.h>

#include <cmath>

#include "rcm/problem_io.hpp"

using namespace rcm;

namespace {

const char* kEuclideanSpec = R"({
  "manifold": {"kind": "euclidean", "dim": 2},
  "points": [[0, 0], [2, 0], [1, 3]],
  "solver": {"tolerance": 1e-10, "max_iterations": 200}
})";

}  // namespace

TEST_CASE("parse_problem reads manifold, points and solver settings") {
  const ProblemSpec spec = parse_problem(kEuclideanSpec, "inline");
  CHECK(spec.space.kind == ManifoldKind::Euclidean);
  CHECK(spec.space.dim == 2);
  CHECK(spec.sample.size() == 3);
  // masses default to uniform
  for (const double m : spec.sample.masses) CHECK(m == doctest::Approx(1.0 / 3));
  CHECK(spec.solver.max_iterations == 200);
  CHECK(spec.solver.ball_check == BallCheck::Enforce);
}

TEST_CASE("parse_problem rejects malformed JSON with a line reference") {
  const std::string broken = "{\n  \"manifold\": {\"kind\": \"euclidean\", \"dim\": 2},\n  oops\n}";
  try {
    parse_problem(broken, "broken.json");
    FAIL("expected InvalidInputError");
  } catch (const InvalidInputError& e) {
    CHECK(std::string(e.what()).find("broken.json:3") != std::string::npos);
  }
}

TEST_CASE("parse_problem names the offending mass sum") {
  const char* text = R"({
    "manifold": {"kind": "euclidean", "dim": 2},
    "points": [[0, 0], [1, 0]],
    "masses": [0.25, 0.25]
  })";
  try {
    parse_problem(text, "bad_masses.json");
    FAIL("expected InvalidInputError");
  } catch (const InvalidInputError& e) {
    CHECK(std::string(e.what()).find("0.5") != std::string::npos);
  }
}

TEST_CASE("parse_problem reports invalid points with their index") {
  const char* text = R"({
    "manifold": {"kind": "sphere", "dim": 2},
    "points": [[1, 0, 0], [1, 1, 0]]
  })";
  try {
    parse_problem(text, "bad_point.json");
    FAIL("expected InvalidInputError");
  } catch (const InvalidInputError& e) {
    const std::string what = e.what();
    CHECK(what.find("/points/1") != std::string::npos);
    CHECK(what.find("residual") != std::string::npos);
  }
}

TEST_CASE("parse_problem maps SO(n) intrinsic dimensions") {
  const char* text = R"({
    "manifold": {"kind": "special_orthogonal", "dim": 3, "norm_flavor": "operator"},
    "points": [[1,0,0, 0,1,0, 0,0,1]]
  })";
  const ProblemSpec spec = parse_problem(text, "so3.json");
  CHECK(spec.space.kind == ManifoldKind::SpecialOrthogonal);
  CHECK(spec.space.matrix_size() == 3);
  CHECK(spec.space.norm_flavor == NormFlavor::Operator);

  const char* bad_dim = R"({
    "manifold": {"kind": "special_orthogonal", "dim": 4},
    "points": [[1,0, 0,1]]
  })";
  CHECK_THROWS_AS(parse_problem(bad_dim, "so_bad.json"), InvalidInputError);
}

TEST_CASE("format_double prints 17 significant digits round-trippably") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(M_PI) == "3.1415926535897931");
  const double awkward = 0.1 + 0.2;
  CHECK(std::stod(format_double(awkward)) == awkward);
}

TEST_CASE("mean_result_json carries the stable schema") {
  ConvergenceReport report;
  report.status = SolveStatus::Converged;
  report.iterations = 1;
  Eigen::VectorXd c(2);
  c << 1.0, 1.0;
  report.center = {c, ManifoldKind::Euclidean};
  const std::string json = mean_result_json(report, 0.0, 0.5);
  CHECK(json.find("\"center\":[1,1]") != std::string::npos);
  CHECK(json.find("\"status\":\"converged\"") != std::string::npos);
  CHECK(json.find("\"iterations\":1") != std::string::npos);
  CHECK(json.find("\"gradient_norm\":0") != std::string::npos);
  CHECK(json.find("\"frechet_value\":0.5") != std::string::npos);

  const std::string with_null = mean_result_json(report, std::nullopt, 0.5);
  CHECK(with_null.find("\"gradient_norm\":null") != std::string::npos);
}

TEST_CASE("trace_csv writes the pinned header and one row per entry") {
  ConvergenceReport report;
  report.trace = {{0, 0.5, 1.25}, {1, 0.0, 1.0}};
  const std::string csv = trace_csv(report);
  CHECK(csv.rfind("iteration,gradient_norm,frechet_value\n", 0) == 0);
  CHECK(csv.find("0,0.5,1.25\n") != std::string::npos);
  CHECK(csv.find("1,0,1\n") != std::string::npos);
}

TEST_CASE("exit codes follow the status table") {
  CHECK(exit_code_for(SolveStatus::Converged) == 0);
  CHECK(exit_code_for(SolveStatus::BallViolation) == 2);
  CHECK(exit_code_for(SolveStatus::CutLocus) == 3);
  CHECK(exit_code_for(SolveStatus::MaxIterationsReached) == 4);
}
