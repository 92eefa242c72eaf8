#include "rcm/problem_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcm/field.hpp"

namespace rcm {
namespace {

using nlohmann::json;

int line_of_byte(const std::string& text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + end, '\n'));
}

ManifoldKind kind_from_string(const std::string& s) {
  if (s == "euclidean") return ManifoldKind::Euclidean;
  if (s == "sphere") return ManifoldKind::Sphere;
  if (s == "hyperboloid") return ManifoldKind::Hyperboloid;
  if (s == "special_orthogonal") return ManifoldKind::SpecialOrthogonal;
  throw InvalidInputError("unknown manifold kind \"" + s +
                          "\" (expected euclidean, sphere, hyperboloid or special_orthogonal)");
}

ModelSpace space_from_json(const json& j) {
  if (!j.contains("kind")) throw InvalidInputError("/manifold: missing \"kind\"");
  if (!j.contains("dim")) throw InvalidInputError("/manifold: missing \"dim\"");
  const ManifoldKind kind = kind_from_string(j.at("kind").get<std::string>());
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw InvalidInputError("/manifold/dim: must be >= 1");

  NormFlavor flavor = NormFlavor::Frobenius;
  if (j.contains("norm_flavor")) {
    const std::string f = j.at("norm_flavor").get<std::string>();
    if (f == "frobenius") {
      flavor = NormFlavor::Frobenius;
    } else if (f == "operator") {
      flavor = NormFlavor::Operator;
    } else {
      throw InvalidInputError("/manifold/norm_flavor: expected \"frobenius\" or \"operator\"");
    }
    if (kind != ManifoldKind::SpecialOrthogonal) {
      throw InvalidInputError("/manifold/norm_flavor: only meaningful for special_orthogonal");
    }
  }

  switch (kind) {
    case ManifoldKind::Euclidean: return ModelSpace::euclidean(dim);
    case ManifoldKind::Sphere: return ModelSpace::sphere(dim);
    case ManifoldKind::Hyperboloid: return ModelSpace::hyperboloid(dim);
    case ManifoldKind::SpecialOrthogonal: {
      for (int n = 2; n <= 8; ++n) {
        if (n * (n - 1) / 2 == dim) return ModelSpace::special_orthogonal(n, flavor);
      }
      throw InvalidInputError(
          "/manifold/dim: special_orthogonal needs dim = n(n-1)/2 for some 2 <= n <= 8");
    }
  }
  throw InvalidInputError("/manifold/kind: unknown kind");
}

SolverConfig solver_from_json(const json& j) {
  SolverConfig config;
  if (j.contains("tolerance")) config.tolerance = j.at("tolerance").get<double>();
  if (j.contains("max_iterations")) config.max_iterations = j.at("max_iterations").get<int>();
  if (j.contains("step_scale")) config.step_scale = j.at("step_scale").get<double>();
  if (j.contains("ball_check")) {
    const std::string mode = j.at("ball_check").get<std::string>();
    const auto parsed = ball_check_from_string(mode);
    if (!parsed) {
      throw InvalidInputError("/solver/ball_check: expected enforce, warn or skip");
    }
    config.ball_check = *parsed;
  }
  if (!(config.tolerance > 0.0)) throw InvalidInputError("/solver/tolerance: must be positive");
  if (config.max_iterations < 0) throw InvalidInputError("/solver/max_iterations: must be >= 0");
  if (!(config.step_scale > 0.0) || config.step_scale > 1.0) {
    throw InvalidInputError("/solver/step_scale: must lie in (0, 1]");
  }
  return config;
}

}  // namespace

std::optional<BallCheck> ball_check_from_string(const std::string& text) {
  if (text == "enforce") return BallCheck::Enforce;
  if (text == "warn") return BallCheck::Warn;
  if (text == "skip") return BallCheck::Skip;
  return std::nullopt;
}

ProblemSpec parse_problem(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << name << ":" << line_of_byte(text, e.byte) << ": " << e.what();
    throw InvalidInputError(os.str());
  }

  try {
    if (!j.contains("manifold")) throw InvalidInputError("missing \"manifold\"");
    if (!j.contains("points")) throw InvalidInputError("missing \"points\"");
    const ModelSpace space = space_from_json(j.at("manifold"));

    const json& jp = j.at("points");
    if (!jp.is_array() || jp.empty()) throw InvalidInputError("/points: must be a nonempty array");
    std::vector<Eigen::VectorXd> points;
    points.reserve(jp.size());
    for (std::size_t i = 0; i < jp.size(); ++i) {
      const json& row = jp.at(i);
      if (!row.is_array() || static_cast<int>(row.size()) != space.ambient_size()) {
        throw InvalidInputError("/points/" + std::to_string(i) + ": expected " +
                                std::to_string(space.ambient_size()) + " coordinates");
      }
      Eigen::VectorXd c(space.ambient_size());
      for (int k = 0; k < space.ambient_size(); ++k) c[k] = row.at(k).get<double>();
      if (auto bad = validate_point(space, {c, space.kind})) {
        throw InvalidInputError("/points/" + std::to_string(i) + ": " + *bad);
      }
      points.push_back(std::move(c));
    }

    std::vector<double> masses;
    if (j.contains("masses")) {
      const json& jm = j.at("masses");
      if (!jm.is_array() || jm.size() != points.size()) {
        throw InvalidInputError("/masses: expected one mass per point");
      }
      for (const auto& m : jm) masses.push_back(m.get<double>());
    } else {
      masses.assign(points.size(), 1.0 / static_cast<double>(points.size()));
    }

    ProblemSpec spec;
    spec.space = space;
    spec.sample = make_sample(space, std::move(points), std::move(masses));
    if (j.contains("solver")) spec.solver = solver_from_json(j.at("solver"));
    return spec;
  } catch (const InvalidInputError& e) {
    throw InvalidInputError(name + ": " + e.what());
  } catch (const json::exception& e) {
    throw InvalidInputError(name + ": " + e.what());
  }
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str(), path);
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_vector(const Eigen::VectorXd& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += format_double(v[i]);
  }
  out += "]";
  return out;
}

namespace {

std::string or_null(const std::optional<double>& value) {
  return value ? format_double(*value) : "null";
}

}  // namespace

std::string mean_result_json(const ConvergenceReport& report,
                             std::optional<double> gradient_norm,
                             std::optional<double> frechet) {
  std::string out = "{\"center\":";
  out += format_vector(report.center.coords);
  out += ",\"status\":\"";
  out += to_string(report.status);
  out += "\",\"iterations\":";
  out += std::to_string(report.iterations);
  out += ",\"gradient_norm\":";
  out += or_null(gradient_norm);
  out += ",\"frechet_value\":";
  out += or_null(frechet);
  out += "}\n";
  return out;
}

std::string trace_csv(const ConvergenceReport& report) {
  std::string out = "iteration,gradient_norm,frechet_value\n";
  for (const auto& entry : report.trace) {
    out += std::to_string(entry.iteration);
    out += ",";
    out += format_double(entry.gradient_norm);
    out += ",";
    out += format_double(entry.frechet_value);
    out += "\n";
  }
  return out;
}

std::string compare_result_json(const ModelSpace& space, const WeightedSample& sample,
                                const std::vector<CompareEntry>& centers) {
  std::string out = "{\"manifold\":\"";
  out += to_string(space.kind);
  out += "\",\"centers\":{";
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (i > 0) out += ",";
    out += "\"" + centers[i].label + "\":" + format_vector(centers[i].center.coords);
  }
  out += "},\"statuses\":{";
  bool first = true;
  for (const auto& c : centers) {
    if (!c.status) continue;
    if (!first) out += ",";
    out += "\"" + c.label + "\":\"" + *c.status + "\"";
    first = false;
  }
  out += "},\"pairwise_distances\":{";
  first = true;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t k = i + 1; k < centers.size(); ++k) {
      if (!first) out += ",";
      out += "\"" + centers[i].label + "_" + centers[k].label + "\":";
      out += format_double(dist(space, centers[i].center, centers[k].center));
      first = false;
    }
  }
  out += "},\"frechet_values\":{";
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (i > 0) out += ",";
    out += "\"" + centers[i].label + "\":";
    out += format_double(frechet_value(space, sample, centers[i].center));
  }
  out += "}}\n";
  return out;
}

std::string oracle_result_json(const OracleResult& oracle, const ConvergenceReport& solver_report,
                               double distance) {
  std::string out = "{\"oracle_center\":";
  out += format_vector(oracle.point.coords);
  out += ",\"f_value\":";
  out += format_double(oracle.f_value);
  out += ",\"resolution_bound\":";
  out += format_double(oracle.resolution_bound);
  out += ",\"solver_center\":";
  out += format_vector(solver_report.center.coords);
  out += ",\"solver_status\":\"";
  out += to_string(solver_report.status);
  out += "\",\"distance\":";
  out += format_double(distance);
  out += "}\n";
  return out;
}

}  // namespace rcm
