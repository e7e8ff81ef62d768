#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "cuspidal/numerics.hpp"

namespace testing_support {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(987654321ULL);
  return g;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

/// Central differences at steps h and h/2 combined to fourth order.
inline double fd4(const std::function<double(double, double)>& g, double s, double t, int i, int k, double h) {
  const double a = cuspidal::fd_oracle(g, s, t, i, k, h);
  const double b = cuspidal::fd_oracle(g, s, t, i, k, h / 2);
  return (4 * b - a) / 3;
}

/// max(abs, rel |want|) test used by the property suites.
inline bool close_mixed(double got, double want, double abs_tol, double rel_tol) {
  return std::abs(got - want) <= std::max(abs_tol, rel_tol * std::abs(want));
}

inline double rel_err(double got, double want, double floor = 1e-12) {
  return std::abs(got - want) / std::max(std::abs(want), floor);
}

}  // namespace testing_support
