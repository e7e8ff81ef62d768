#include "cuspidal/jet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cuspidal {
namespace {

void require_same_base(const Jet2& a, const Jet2& b) {
  if (a.s0() != b.s0() || a.t0() != b.t0())
    throw std::invalid_argument("Jet2: operands expanded at different base points");
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// sum_n f[n] (a - a0)^n by Horner.
Jet2 apply_series(const Jet2& a, const std::vector<double>& f) {
  Jet2 h = a;
  h.at(0, 0) = 0.0;
  const int n = static_cast<int>(f.size()) - 1;
  Jet2 r = Jet2::constant(f[n], a.order(), a.s0(), a.t0());
  for (int k = n - 1; k >= 0; --k) {
    r = r * h;
    r += f[k];
  }
  return r;
}

std::vector<double> binomial_series(double a0, double p, int order) {
  std::vector<double> f(order + 1);
  double binom = 1.0;
  for (int n = 0; n <= order; ++n) {
    f[n] = binom * std::pow(a0, p - n);
    binom *= (p - n) / (n + 1);
  }
  return f;
}

}  // namespace

Jet2::Jet2(int order, double s0, double t0) : order_(order), s0_(s0), t0_(t0) {
  if (order < 0) throw std::invalid_argument("Jet2: negative order");
  c_.assign(size_for(order), 0.0);
}

Jet2 Jet2::constant(double c, int order, double s0, double t0) {
  Jet2 j(order, s0, t0);
  j.c_[0] = c;
  return j;
}

Jet2 Jet2::variable_s(int order, double s0, double t0) {
  Jet2 j = constant(s0, order, s0, t0);
  if (order >= 1) j.at(1, 0) = 1.0;
  return j;
}

Jet2 Jet2::variable_t(int order, double s0, double t0) {
  Jet2 j = constant(t0, order, s0, t0);
  if (order >= 1) j.at(0, 1) = 1.0;
  return j;
}

double Jet2::coefficient(int i, int k) const {
  if (i < 0 || k < 0 || i + k > order_)
    throw std::out_of_range("Jet2::coefficient: (" + std::to_string(i) + "," + std::to_string(k) +
                            ") exceeds order " + std::to_string(order_));
  return c_[index(i, k)];
}

double Jet2::partial(int i, int k) const { return coefficient(i, k) * factorial(i) * factorial(k); }

double Jet2::max_abs() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

Jet2 Jet2::truncated(int order) const {
  if (order >= order_) return *this;
  Jet2 r(order, s0_, t0_);
  std::copy_n(c_.begin(), size_for(order), r.c_.begin());
  return r;
}

Jet2 Jet2::derivative_s() const {
  Jet2 r(std::max(order_ - 1, 0), s0_, t0_);
  for (int d = 1; d <= order_; ++d)
    for (int k = 0; k < d; ++k) {
      const int i = d - k;
      r.at(i - 1, k) = i * at(i, k);
    }
  return r;
}

Jet2 Jet2::derivative_t() const {
  Jet2 r(std::max(order_ - 1, 0), s0_, t0_);
  for (int d = 1; d <= order_; ++d)
    for (int k = 1; k <= d; ++k) r.at(d - k, k - 1) = k * at(d - k, k);
  return r;
}

Jet2 Jet2::antiderivative_t() const {
  Jet2 r(order_, s0_, t0_);
  for (int d = 0; d < order_; ++d)
    for (int k = 0; k <= d; ++k) r.at(d - k, k + 1) = at(d - k, k) / (k + 1);
  return r;
}

double Jet2::evaluate(double s, double t) const {
  const double ds = s - s0_, dt = t - t0_;
  double acc = 0.0;
  double sp = 1.0;
  for (int i = 0; i <= order_; ++i) {
    double row = 0.0, tp = 1.0;
    for (int k = 0; i + k <= order_; ++k) {
      row += at(i, k) * tp;
      tp *= dt;
    }
    acc += row * sp;
    sp *= ds;
  }
  return acc;
}

Jet2& Jet2::operator+=(const Jet2& o) {
  require_same_base(*this, o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  require_same_base(*this, o);
  if (o.order_ < order_) *this = truncated(o.order_);
  for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& o) { return *this = *this * o; }

Jet2& Jet2::operator*=(double c) {
  for (double& v : c_) v *= c;
  return *this;
}

Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }

Jet2 operator*(const Jet2& a, const Jet2& b) {
  require_same_base(a, b);
  const int n = std::min(a.order(), b.order());
  Jet2 r(n, a.s0(), a.t0());
  for (int d1 = 0; d1 <= n; ++d1)
    for (int k1 = 0; k1 <= d1; ++k1) {
      const double x = a.at(d1 - k1, k1);
      if (x == 0.0) continue;
      const int i1 = d1 - k1;
      for (int d2 = 0; d1 + d2 <= n; ++d2)
        for (int k2 = 0; k2 <= d2; ++k2) r.at(i1 + d2 - k2, k1 + k2) += x * b.at(d2 - k2, k2);
    }
  return r;
}

Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
Jet2 operator-(Jet2 a) { return a *= -1.0; }
Jet2 operator+(Jet2 a, double c) { return a += c; }
Jet2 operator+(double c, Jet2 a) { return a += c; }
Jet2 operator-(Jet2 a, double c) { return a -= c; }
Jet2 operator-(double c, const Jet2& a) { return -a + c; }
Jet2 operator*(Jet2 a, double c) { return a *= c; }
Jet2 operator*(double c, Jet2 a) { return a *= c; }
Jet2 operator/(Jet2 a, double c) { return a *= 1.0 / c; }
Jet2 operator/(double c, const Jet2& a) { return reciprocal(a) * c; }

Jet2 reciprocal(const Jet2& a) {
  const double a0 = a.value();
  if (a0 == 0.0) throw std::domain_error("Jet2: division by a jet with zero constant term");
  std::vector<double> f(a.order() + 1);
  double p = 1.0 / a0;
  for (int n = 0; n <= a.order(); ++n) {
    f[n] = (n % 2 == 0 ? p : -p);
    p /= a0;
  }
  return apply_series(a, f);
}

Jet2 sqrt(const Jet2& a) {
  if (!(a.value() > 0.0)) throw std::domain_error("Jet2: sqrt of a jet with nonpositive constant term");
  return apply_series(a, binomial_series(a.value(), 0.5, a.order()));
}

Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const double cyc[4] = {s, c, -s, -c};
  std::vector<double> f(a.order() + 1);
  for (int n = 0; n <= a.order(); ++n) f[n] = cyc[n % 4] / factorial(n);
  return apply_series(a, f);
}

Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  const double cyc[4] = {c, -s, -c, s};
  std::vector<double> f(a.order() + 1);
  for (int n = 0; n <= a.order(); ++n) f[n] = cyc[n % 4] / factorial(n);
  return apply_series(a, f);
}

Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  std::vector<double> f(a.order() + 1);
  for (int n = 0; n <= a.order(); ++n) f[n] = (n % 2 == 0 ? s : c) / factorial(n);
  return apply_series(a, f);
}

Jet2 cosh(const Jet2& a) {
  const double s = std::sinh(a.value()), c = std::cosh(a.value());
  std::vector<double> f(a.order() + 1);
  for (int n = 0; n <= a.order(); ++n) f[n] = (n % 2 == 0 ? c : s) / factorial(n);
  return apply_series(a, f);
}

Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value());
  std::vector<double> f(a.order() + 1);
  for (int n = 0; n <= a.order(); ++n) f[n] = e / factorial(n);
  return apply_series(a, f);
}

Jet2 log(const Jet2& a) {
  const double a0 = a.value();
  if (!(a0 > 0.0)) throw std::domain_error("Jet2: log of a jet with nonpositive constant term");
  std::vector<double> f(a.order() + 1);
  f[0] = std::log(a0);
  double p = a0;
  for (int n = 1; n <= a.order(); ++n) {
    f[n] = (n % 2 == 1 ? 1.0 : -1.0) / (n * p);
    p *= a0;
  }
  return apply_series(a, f);
}

Jet2 pow(const Jet2& a, int n) {
  if (n < 0) return reciprocal(pow(a, -n));
  Jet2 result = Jet2::constant(1.0, a.order(), a.s0(), a.t0());
  Jet2 base = a;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Jet2 pow(const Jet2& a, double p) {
  if (p == std::round(p) && std::abs(p) <= 64.0) return pow(a, static_cast<int>(p));
  if (!(a.value() > 0.0)) throw std::domain_error("Jet2: non-integral power of a nonpositive jet");
  return apply_series(a, binomial_series(a.value(), p, a.order()));
}

Jet2 compose(const Jet2& f, const Jet2& ds, const Jet2& dt) {
  require_same_base(ds, dt);
  if (ds.value() != 0.0 || dt.value() != 0.0)
    throw std::invalid_argument("compose: increments must have zero constant term");
  const int n = std::min({f.order(), ds.order(), dt.order()});
  std::vector<Jet2> sp{Jet2::constant(1.0, n, ds.s0(), ds.t0())};
  std::vector<Jet2> tp{sp[0]};
  for (int i = 1; i <= n; ++i) {
    sp.push_back(sp.back() * ds);
    tp.push_back(tp.back() * dt);
  }
  Jet2 r(n, ds.s0(), ds.t0());
  for (int d = 0; d <= n; ++d)
    for (int k = 0; k <= d; ++k) {
      const double c = f.at(d - k, k);
      if (c != 0.0) r += (sp[d - k] * tp[k]) * c;
    }
  return r;
}

Jet2 dot(const Jet3& a, const Jet3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Jet2 inner(const Metric& metric, const Jet3& a, const Jet3& b) {
  Jet2 zz = a[2] * b[2];
  return metric.is_lorentzian() ? a[0] * b[0] + a[1] * b[1] - zz : a[0] * b[0] + a[1] * b[1] + zz;
}

Jet3 cross(const Metric& metric, const Jet3& a, const Jet3& b) {
  Jet3 r{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  if (metric.is_lorentzian()) r[2] = -r[2];
  return r;
}

Jet2 det3(const Jet3& a, const Jet3& b, const Jet3& c) { return dot(cross(Metric::euclidean(), a, b), c); }

Jet3 derivative_s(const Jet3& a) { return {a[0].derivative_s(), a[1].derivative_s(), a[2].derivative_s()}; }
Jet3 derivative_t(const Jet3& a) { return {a[0].derivative_t(), a[1].derivative_t(), a[2].derivative_t()}; }

Vec3 value(const Jet3& a) { return {a[0].value(), a[1].value(), a[2].value()}; }

Vec3 partial(const Jet3& a, int i, int k) { return {a[0].partial(i, k), a[1].partial(i, k), a[2].partial(i, k)}; }

}  // namespace cuspidal
