#include "cuspidal/cusp2d.hpp"

#include <cmath>
#include <stdexcept>

#include "cuspidal/numerics.hpp"

namespace cuspidal {

std::string to_string(CuspStyle style) {
  return style == CuspStyle::EuclideanTrig ? "euclidean_trig" : "lorentz_hyperbolic";
}

PlaneCusp::PlaneCusp(CuspStyle style, std::vector<double> mu, int order)
    : style_(style), mu_(std::move(mu)), order_(order) {
  if (order < 4) throw std::invalid_argument("build_cusp: order must be at least 4");
  if (mu_.empty()) throw std::invalid_argument("build_cusp: mu_0 is required");
  Jet2 lam(order, 0.0, 0.0);
  double fact = 1.0;
  for (std::size_t k = 0; k < mu_.size() && static_cast<int>(k) + 1 <= order; ++k) {
    fact *= static_cast<double>(k + 1);
    lam.at(0, static_cast<int>(k) + 1) = mu_[k] / fact;
  }
  const Jet2 u = Jet2::variable_t(order, 0.0, 0.0);
  if (style_ == CuspStyle::EuclideanTrig) {
    a_ = (u * cos(lam)).antiderivative_t();
    b_ = (u * sin(lam)).antiderivative_t();
  } else {
    a_ = (u * cosh(lam)).antiderivative_t();
    b_ = (u * sinh(lam)).antiderivative_t();
  }
}

double PlaneCusp::mu_at(double t) const {
  double r = 0.0, p = 1.0;
  for (std::size_t k = 0; k < mu_.size(); ++k) {
    r += mu_[k] * p;
    p *= t / static_cast<double>(k + 1);
  }
  return r;
}

double PlaneCusp::lambda_at(double t) const {
  double r = 0.0, p = t;
  for (std::size_t k = 0; k < mu_.size(); ++k) {
    r += mu_[k] * p;
    p *= t / static_cast<double>(k + 2);
  }
  return r;
}

std::array<double, 2> PlaneCusp::velocity(double t) const {
  const double l = lambda_at(t);
  if (style_ == CuspStyle::EuclideanTrig) return {t * std::cos(l), t * std::sin(l)};
  return {t * std::cosh(l), t * std::sinh(l)};
}

std::array<double, 2> PlaneCusp::acceleration(double t) const {
  const double l = lambda_at(t), m = mu_at(t);
  if (style_ == CuspStyle::EuclideanTrig)
    return {std::cos(l) - t * m * std::sin(l), std::sin(l) + t * m * std::cos(l)};
  return {std::cosh(l) + t * m * std::sinh(l), std::sinh(l) + t * m * std::cosh(l)};
}

std::array<double, 2> PlaneCusp::point(double t) const {
  if (t == 0.0) return {0.0, 0.0};
  auto v = [this](double u) {
    const auto w = velocity(u);
    return std::array<double, 2>{w[0], w[1]};
  };
  double ax = 0.0, ay = 0.0;
  const QuadratureRule& rule = gauss_legendre(24);
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(t) / 0.25)));
  const double h = t / panels;
  for (int p = 0; p < panels; ++p)
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const auto w = v(p * h + 0.5 * h * (rule.nodes[i] + 1.0));
      ax += 0.5 * h * rule.weights[i] * w[0];
      ay += 0.5 * h * rule.weights[i] * w[1];
    }
  return {ax, ay};
}

double PlaneCusp::speed_sq(const std::array<double, 2>& v) const {
  return style_ == CuspStyle::EuclideanTrig ? v[0] * v[0] + v[1] * v[1] : v[0] * v[0] - v[1] * v[1];
}

double PlaneCusp::curvature(double t) const {
  const auto v = velocity(t), a = acceleration(t);
  const double speed = std::sqrt(std::abs(speed_sq(v)));
  return (v[0] * a[1] - v[1] * a[0]) / (speed * speed * speed);
}

double PlaneCusp::arc_length(double t, double tol) const {
  return adaptive_simpson([this](double u) { return std::sqrt(std::abs(speed_sq(velocity(u)))); }, 0.0, t, tol);
}

PlaneCusp build_cusp(CuspStyle style, const MuSpec& mu, int order, double s) {
  if (mu.empty()) throw std::invalid_argument("build_cusp: mu_0 is required");
  std::vector<double> values;
  for (const Expr& c : mu.coefficients()) values.push_back(c.eval(s));
  return PlaneCusp(style, std::move(values), order);
}

CuspidalCurvatureLimit cuspidal_curvature_limit(const PlaneCusp& c, MetricKind metric, double t0, int levels) {
  const bool lorentz = metric == MetricKind::Lorentzian;
  if (lorentz != (c.style() == CuspStyle::LorentzHyperbolic))
    throw std::invalid_argument("cuspidal_curvature_limit: metric does not match the cusp style");
  std::vector<double> samples;
  double t = t0;
  for (int j = 0; j <= levels; ++j, t *= 0.5)
    samples.push_back(2.0 * std::sqrt(2.0) * c.curvature(t) * std::sqrt(std::abs(c.arc_length(t))));
  const Extrapolation e = richardson_limit(samples);
  CuspidalCurvatureLimit r{e.value, e.error, e.converged, {}};
  if (classify_cusp(c) == CuspKind::GeneralizedCuspOnly) r.warning = "not a cusp: mu_0 vanishes, limit is 0";
  return r;
}

double reconstruct_mu(const PlaneCusp& c, double t) {
  return c.curvature(t) * std::sqrt(2.0 * std::abs(c.arc_length(t)));
}

CuspKind classify_cusp(const PlaneCusp& c, double tol) {
  return std::abs(c.mu()[0]) > tol ? CuspKind::Cusp : CuspKind::GeneralizedCuspOnly;
}

}  // namespace cuspidal
