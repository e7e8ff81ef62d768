#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace cuspidal {

struct Extrapolation {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

/// Richardson extrapolation of samples g(h0 / ratio^j), j = 0..n-1, to h -> 0,
/// assuming an error expansion in integer powers of h.
Extrapolation richardson_limit(std::span<const double> samples, double ratio = 2.0);

/// Adaptive Simpson quadrature on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol = 1e-10,
                        int max_depth = 50);

struct QuadratureRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

const QuadratureRule& gauss_legendre(int n);

/// Composite Gauss-Legendre on [a, b] with panels no wider than max_width.
template <class F>
auto integrate_panels(F&& f, double a, double b, int n, double max_width) {
  const QuadratureRule& rule = gauss_legendre(n);
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / max_width)));
  const double h = (b - a) / panels;
  using R = decltype(f(a));
  R acc{};
  bool first = true;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = lo + 0.5 * h * (rule.nodes[i] + 1.0);
      R term = f(u) * (0.5 * h * rule.weights[i]);
      if (first) {
        acc = term;
        first = false;
      } else {
        acc += term;
      }
    }
  }
  return acc;
}

/// Central finite-difference estimate of d^{i+k} g / ds^i dt^k at (s, t).
/// Throws std::invalid_argument for step <= 0.
double fd_oracle(const std::function<double(double, double)>& g, double s, double t, int i, int k, double step);

}  // namespace cuspidal
