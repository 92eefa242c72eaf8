#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace rcm {

/// Deterministic random source. Variates are derived from the raw 64-bit
/// stream by fixed arithmetic, so a seed reproduces the same values on every
/// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform01();
  double uniform(double a, double b);

  /// Standard normal via Box-Muller (no cached spare).
  double normal();
  Eigen::VectorXd normal_vector(int n);

 private:
  std::mt19937_64 gen_;
};

}  // namespace rcm
