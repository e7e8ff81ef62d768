#include "cuspidal/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace cuspidal {

Extrapolation richardson_limit(std::span<const double> samples, double ratio) {
  const std::size_t n = samples.size();
  if (n == 0) throw std::invalid_argument("richardson_limit: no samples");
  std::vector<std::vector<double>> table(n);
  for (std::size_t j = 0; j < n; ++j) {
    table[j].resize(j + 1);
    table[j][0] = samples[j];
    double factor = 1.0;
    for (std::size_t m = 1; m <= j; ++m) {
      factor *= ratio;
      table[j][m] = (factor * table[j][m - 1] - table[j - 1][m - 1]) / (factor - 1.0);
    }
  }
  Extrapolation r;
  r.value = table[n - 1][n - 1];
  if (n == 1) {
    r.error = std::abs(samples[0]);
    r.converged = false;
    return r;
  }
  r.error = std::max(std::abs(r.value - table[n - 1][n - 2]), std::abs(r.value - table[n - 2][n - 2]));
  for (double v : samples)
    if (!std::isfinite(v)) {
      r.converged = false;
      return r;
    }
  r.converged = r.error <= 1e-4 * std::max(1.0, std::abs(r.value));
  return r;
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

const QuadratureRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, QuadratureRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

double fd_oracle(const std::function<double(double, double)>& g, double s, double t, int i, int k, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_oracle: step must be positive");
  if (i < 0 || k < 0) throw std::invalid_argument("fd_oracle: negative multi-index");
  // Tensor product of central difference stencils with offsets (n/2 - j) h.
  auto binom = [](int n, int j) {
    double r = 1.0;
    for (int q = 1; q <= j; ++q) r = r * (n - q + 1) / q;
    return r;
  };
  double acc = 0.0;
  for (int a = 0; a <= i; ++a)
    for (int b = 0; b <= k; ++b) {
      const double w = ((a + b) % 2 == 0 ? 1.0 : -1.0) * binom(i, a) * binom(k, b);
      acc += w * g(s + (0.5 * i - a) * step, t + (0.5 * k - b) * step);
    }
  return acc / std::pow(step, i + k);
}

}  // namespace cuspidal
