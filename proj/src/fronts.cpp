#include "cuspidal/fronts.hpp"

#include <algorithm>
#include <cmath>

#include "cuspidal/numerics.hpp"

namespace cuspidal {

namespace {

bool vanishes(const Vec3& v, double scale) { return norm(v) <= 1e-12 * std::max(scale, 1e-300); }

Jet2 shift_t(const Jet2& j) {
  Jet2 r(j.order() - 1, j.s0(), j.t0());
  for (int d = 0; d < j.order(); ++d)
    for (int k = 0; k <= d; ++k) r.at(d - k, k) = j.at(d - k, k + 1);
  return r;
}

}  // namespace

Jet3 unit_normal_jet(const Surface& surface, double s, double t, int order, double tol_scale) {
  const Metric m = surface.metric();
  Jet3 f = surface.jet(s, t, order + 2);
  Jet3 fs = derivative_s(f), ft = derivative_t(f);
  Jet3 nu = cross(m, fs, ft);
  const Vec3 fs0 = value(fs), ftt0 = partial(f, 0, 2);
  if (vanishes(value(nu), norm(fs0) * std::max(norm(value(ft)), norm(ftt0)))) {
    for (auto& c : nu) c = shift_t(c);
  } else {
    for (auto& c : nu) c = c.truncated(order + 1);
  }
  const Jet2 n2 = inner(m, nu, nu);
  const Vec3 n0 = value(nu);
  if (std::abs(n2.value()) <= 1e-12 * tol_scale * dot(n0, n0) || dot(n0, n0) == 0.0) throw LightlikePoint(s, t);
  const Jet2 len = n2.value() > 0 ? sqrt(n2) : sqrt(-n2);
  Jet3 r;
  for (int i = 0; i < 3; ++i) r[i] = (nu[i] / len).truncated(order);
  return r;
}

namespace {

bool singular_along_axis(const Surface& base, double s) {
  if (!dynamic_cast<const Edge*>(&base)) return false;
  const Jet3 j = base.jet(s, 0.0, 1);
  return norm(partial(j, 0, 1)) <= 1e-12 * std::max(1.0, norm(partial(j, 1, 0)));
}

}  // namespace

Jet3 ParallelFront::jet(double s, double t, int order) const {
  const Jet3 f = base_->jet(s, t, order);
  if (offset_ == 0.0) return f;
  const Jet3 nu = unit_normal_jet(*base_, s, t, order, tol_scale_);
  // The smooth normal of a front along {t = 0} is nu~/t, which is -nu for t < 0.
  const double c = t < 0 && singular_along_axis(*base_, s) ? -offset_ : offset_;
  Jet3 r;
  for (int i = 0; i < 3; ++i) r[i] = f[i] - c * nu[i];
  return r;
}

ParallelFront parallel_surface(std::shared_ptr<const Surface> base, double offset) {
  return ParallelFront(std::move(base), offset);
}

std::vector<ParallelRoot> parallel_singular_values(const Surface& base, double u, double v) {
  const CurvatureBundle b = curvature_bundle(base, u, v);
  std::vector<ParallelRoot> r;
  if (b.lambda1.imag() != 0.0 || b.lambda2.imag() != 0.0) return r;
  const double l1 = b.lambda1.real(), l2 = b.lambda2.real();
  const double scale = std::max(std::abs(l1), std::abs(l2));
  if (scale == 0.0) return r;
  if (std::abs(l1 - l2) <= 1e-10 * scale) {
    r.push_back({-1.0 / l1, 2});
    return r;
  }
  for (double l : {l1, l2})
    if (std::abs(l) > 1e-14 * scale) r.push_back({-1.0 / l, 1});
  return r;
}

double parallel_jacobian_det(const Surface& base, double u, double v, double t) {
  const CurvatureBundle b = curvature_bundle(base, u, v);
  const Mat2& W = b.W;
  return (1 + t * W[0][0]) * (1 + t * W[1][1]) - t * t * W[0][1] * W[1][0];
}

double lorentz_weingarten_residual(const Surface& base, double u, double v, double fd_step) {
  const CurvatureBundle b = curvature_bundle(base, u, v);
  Vec3 nu_u, nu_v;
  if (fd_step > 0.0) {
    auto comp = [&](int i) {
      return [&, i](double s, double t) {
        const Vec3 n = value(unit_normal_jet(base, s, t, 0));
        return i == 0 ? n.x : (i == 1 ? n.y : n.z);
      };
    };
    double du[3], dv[3];
    for (int i = 0; i < 3; ++i) {
      du[i] = fd_oracle(comp(i), u, v, 1, 0, fd_step);
      dv[i] = fd_oracle(comp(i), u, v, 0, 1, fd_step);
    }
    nu_u = Vec3(du[0], du[1], du[2]);
    nu_v = Vec3(dv[0], dv[1], dv[2]);
  } else {
    const Jet3 nu = unit_normal_jet(base, u, v, 1);
    nu_u = partial(nu, 1, 0);
    nu_v = partial(nu, 0, 1);
  }
  const Vec3& fu = b.forms.f_s;
  const Vec3& fv = b.forms.f_t;
  const Mat2& W = b.W;
  const Vec3 ru = nu_u + W[0][0] * fu + W[1][0] * fv;
  const Vec3 rv = nu_v + W[0][1] * fu + W[1][1] * fv;
  return std::max(norm(ru), norm(rv));
}

}  // namespace cuspidal
