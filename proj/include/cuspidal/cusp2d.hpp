#pragma once

#include <array>
#include <string>

#include "cuspidal/expr.hpp"
#include "cuspidal/metric.hpp"

namespace cuspidal {

enum class CuspStyle { EuclideanTrig, LorentzHyperbolic };

std::string to_string(CuspStyle style);

/// Plane cusp c(t) = (A, B) = int_0^t u (cos, sin)(lambda) du, or with
/// (cosh, sinh) in the Lorentz plane, lambda = int_0^t mu.
class PlaneCusp {
 public:
  PlaneCusp(CuspStyle style, std::vector<double> mu, int order);

  CuspStyle style() const { return style_; }
  int order() const { return order_; }
  /// mu_k, the k-th t-derivative of mu at t = 0.
  const std::vector<double>& mu() const { return mu_; }

  /// t-jets of A and B at t = 0.
  const Jet2& a_jet() const { return a_; }
  const Jet2& b_jet() const { return b_; }
  /// k-th derivative of A (alpha_k) and B (beta_k) at t = 0.
  double alpha(int k) const { return a_.partial(0, k); }
  double beta(int k) const { return b_.partial(0, k); }

  double mu_at(double t) const;
  double lambda_at(double t) const;
  std::array<double, 2> point(double t) const;
  std::array<double, 2> velocity(double t) const;
  std::array<double, 2> acceleration(double t) const;
  /// Signed curvature det(c', c'') / |c'|^3 in the plane's own metric.
  double curvature(double t) const;
  /// Signed arc length from 0 to t.
  double arc_length(double t, double tol = 1e-10) const;

 private:
  double speed_sq(const std::array<double, 2>& v) const;

  CuspStyle style_;
  std::vector<double> mu_;
  int order_;
  Jet2 a_, b_;
};

/// Throws std::invalid_argument for order < 4 or a missing mu_0.
PlaneCusp build_cusp(CuspStyle style, const MuSpec& mu, int order, double s = 0.0);

struct CuspidalCurvatureLimit {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
  std::string warning;
};

/// Limit of 2 sqrt(2) kappa(t) sqrt|s(t)| as t -> 0 by Richardson extrapolation
/// over t = t0 2^-j. The metric must match the cusp style.
CuspidalCurvatureLimit cuspidal_curvature_limit(const PlaneCusp& c, MetricKind metric, double t0 = 0.1,
                                                int levels = 6);

/// kappa(t) sqrt(2 |s(t)|), which reproduces mu(t).
double reconstruct_mu(const PlaneCusp& c, double t);

enum class CuspKind { Cusp, GeneralizedCuspOnly };

CuspKind classify_cusp(const PlaneCusp& c, double tol = 1e-10);

}  // namespace cuspidal
