#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cuspidal {

/// Plain 3-vector. No metric is attached; see inner() and cross().
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
      throw std::invalid_argument("Vec3: non-finite component");
  }

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(double c) { x *= c; y *= c; z *= c; return *this; }
  bool operator==(const Vec3&) const = default;
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator-(const Vec3& a) { Vec3 r; r.x = -a.x; r.y = -a.y; r.z = -a.z; return r; }
inline Vec3 operator*(double c, Vec3 a) { return a *= c; }
inline Vec3 operator*(Vec3 a, double c) { return a *= c; }
inline Vec3 operator/(Vec3 a, double c) { return a *= (1.0 / c); }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 euclidean_cross(const Vec3& a, const Vec3& b) {
  Vec3 r;
  r.x = a.y * b.z - a.z * b.y;
  r.y = a.z * b.x - a.x * b.z;
  r.z = a.x * b.y - a.y * b.x;
  return r;
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(euclidean_cross(a, b), c); }

enum class MetricKind { Euclidean, Lorentzian };

/// Diagonal ambient form: identity or E3 = diag(1,1,-1).
class Metric {
 public:
  constexpr Metric() = default;
  constexpr explicit Metric(MetricKind kind) : kind_(kind) {}

  static constexpr Metric euclidean() { return Metric(MetricKind::Euclidean); }
  static constexpr Metric lorentzian() { return Metric(MetricKind::Lorentzian); }

  constexpr MetricKind kind() const { return kind_; }
  constexpr bool is_lorentzian() const { return kind_ == MetricKind::Lorentzian; }
  constexpr std::array<double, 3> diagonal() const {
    return is_lorentzian() ? std::array<double, 3>{1.0, 1.0, -1.0} : std::array<double, 3>{1.0, 1.0, 1.0};
  }
  /// Applies the diagonal form to v (E3 v for Lorentzian).
  Vec3 apply(const Vec3& v) const {
    Vec3 r = v;
    if (is_lorentzian()) r.z = -r.z;
    return r;
  }
  constexpr bool operator==(const Metric&) const = default;

 private:
  MetricKind kind_ = MetricKind::Euclidean;
};

enum class CausalClass { Spacelike, Timelike, Lightlike };

std::string to_string(MetricKind kind);
std::string to_string(CausalClass c);
MetricKind metric_kind_from_string(const std::string& name);

double inner(const Metric& metric, const Vec3& a, const Vec3& b);
inline double norm_sq(const Metric& metric, const Vec3& a) { return inner(metric, a, a); }

/// Euclidean cross product, or E3 (a x b) for the Lorentzian metric.
Vec3 cross(const Metric& metric, const Vec3& a, const Vec3& b);

/// Default tolerance for causal_class: 1e-10 * max(1, |v|_E^2).
double default_causal_tolerance(const Vec3& v);

/// Throws std::invalid_argument for the Euclidean metric.
CausalClass causal_class(const Metric& metric, const Vec3& v, double tol);
CausalClass causal_class(const Metric& metric, const Vec3& v);

}  // namespace cuspidal
