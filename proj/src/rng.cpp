#include "rcm/rng.hpp"

#include <cmath>

namespace rcm {

double Rng::uniform01() {
  // 53 random bits -> [0, 1)
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) { return a + (b - a) * uniform01(); }

double Rng::normal() {
  // u in (0, 1] so the log is finite
  double u = 1.0 - uniform01();
  double r = std::sqrt(-2.0 * std::log(u));
  double theta = 2.0 * M_PI * uniform01();
  return r * std::cos(theta);
}

Eigen::VectorXd Rng::normal_vector(int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = normal();
  return v;
}

}  // namespace rcm
