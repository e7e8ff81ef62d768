#pragma once

#include <array>
#include <span>
#include <vector>

#include "cuspidal/metric.hpp"

namespace cuspidal {

inline constexpr int kDefaultJetOrder = 10;

/// Truncated Taylor expansion in (s - s0, t - t0) of total degree <= order.
/// Coefficients are normalized: f = sum c(i,k) (s-s0)^i (t-t0)^k.
class Jet2 {
 public:
  Jet2() = default;
  Jet2(int order, double s0, double t0);

  static Jet2 constant(double c, int order, double s0, double t0);
  static Jet2 variable_s(int order, double s0, double t0);
  static Jet2 variable_t(int order, double s0, double t0);

  int order() const { return order_; }
  double s0() const { return s0_; }
  double t0() const { return t0_; }

  /// Throws std::out_of_range when i + k > order.
  double coefficient(int i, int k) const;
  /// Partial derivative d^{i+k}/ds^i dt^k at the base point.
  double partial(int i, int k) const;
  double value() const { return c_[0]; }

  double& at(int i, int k) { return c_[index(i, k)]; }
  double at(int i, int k) const { return c_[index(i, k)]; }
  std::span<const double> coefficients() const { return c_; }
  double max_abs() const;

  /// Same expansion at a lower order.
  Jet2 truncated(int order) const;

  Jet2 derivative_s() const;
  Jet2 derivative_t() const;
  /// Term-wise integral in t from t0; the t-constant column is zero.
  Jet2 antiderivative_t() const;
  /// Evaluates the polynomial at (s, t).
  double evaluate(double s, double t) const;

  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(const Jet2& o);
  Jet2& operator+=(double c) { c_[0] += c; return *this; }
  Jet2& operator-=(double c) { c_[0] -= c; return *this; }
  Jet2& operator*=(double c);

  static int size_for(int order) { return (order + 1) * (order + 2) / 2; }
  static int index(int i, int k) {
    const int d = i + k;
    return d * (d + 1) / 2 + k;
  }

 private:
  int order_ = 0;
  double s0_ = 0.0, t0_ = 0.0;
  std::vector<double> c_ = std::vector<double>(1, 0.0);
};

Jet2 operator+(Jet2 a, const Jet2& b);
Jet2 operator-(Jet2 a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
/// Throws std::domain_error when b has a zero constant term.
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator-(Jet2 a);
Jet2 operator+(Jet2 a, double c);
Jet2 operator+(double c, Jet2 a);
Jet2 operator-(Jet2 a, double c);
Jet2 operator-(double c, const Jet2& a);
Jet2 operator*(Jet2 a, double c);
Jet2 operator*(double c, Jet2 a);
Jet2 operator/(Jet2 a, double c);
Jet2 operator/(double c, const Jet2& a);

Jet2 reciprocal(const Jet2& a);
/// Throws std::domain_error for a nonpositive constant term.
Jet2 sqrt(const Jet2& a);
Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 sinh(const Jet2& a);
Jet2 cosh(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);
Jet2 pow(const Jet2& a, int n);
/// Real exponent; integral exponents fall back to repeated products.
Jet2 pow(const Jet2& a, double p);

/// f(s0 + ds, t0 + dt) where ds, dt carry zero constant terms.
Jet2 compose(const Jet2& f, const Jet2& ds, const Jet2& dt);

/// Vector-valued jets.
using Jet3 = std::array<Jet2, 3>;

Jet2 dot(const Jet3& a, const Jet3& b);
Jet2 inner(const Metric& metric, const Jet3& a, const Jet3& b);
Jet3 cross(const Metric& metric, const Jet3& a, const Jet3& b);
Jet2 det3(const Jet3& a, const Jet3& b, const Jet3& c);
Jet3 derivative_s(const Jet3& a);
Jet3 derivative_t(const Jet3& a);
Vec3 value(const Jet3& a);
Vec3 partial(const Jet3& a, int i, int k);

}  // namespace cuspidal
