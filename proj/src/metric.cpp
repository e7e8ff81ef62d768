#include "cuspidal/metric.hpp"

namespace cuspidal {

std::string to_string(MetricKind kind) {
  return kind == MetricKind::Lorentzian ? "lorentzian" : "euclidean";
}

std::string to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Lightlike: return "lightlike";
  }
  return "unknown";
}

MetricKind metric_kind_from_string(const std::string& name) {
  if (name == "euclidean" || name == "E3") return MetricKind::Euclidean;
  if (name == "lorentzian" || name == "L3") return MetricKind::Lorentzian;
  throw std::invalid_argument("unknown metric '" + name + "'");
}

double inner(const Metric& metric, const Vec3& a, const Vec3& b) {
  const double zz = a.z * b.z;
  return a.x * b.x + a.y * b.y + (metric.is_lorentzian() ? -zz : zz);
}

Vec3 cross(const Metric& metric, const Vec3& a, const Vec3& b) {
  return metric.apply(euclidean_cross(a, b));
}

double default_causal_tolerance(const Vec3& v) { return 1e-10 * std::max(1.0, dot(v, v)); }

CausalClass causal_class(const Metric& metric, const Vec3& v, double tol) {
  if (!metric.is_lorentzian())
    throw std::invalid_argument("causal_class: undefined for the Euclidean metric");
  const double q = inner(metric, v, v);
  if (q > tol) return CausalClass::Spacelike;
  if (q < -tol) return CausalClass::Timelike;
  return CausalClass::Lightlike;
}

CausalClass causal_class(const Metric& metric, const Vec3& v) {
  return causal_class(metric, v, default_causal_tolerance(v));
}

}  // namespace cuspidal
