#include "cuspidal/classify.hpp"

#include <algorithm>
#include <cmath>

#include "cuspidal/numerics.hpp"

namespace cuspidal {

namespace {

struct AxisData {
  Vec3 gs, gss, ftt;
};

AxisData axis_data(const Surface& surface, double s) {
  const Jet3 f = surface.jet(s, 0.0, 2);
  return {partial(f, 1, 0), partial(f, 2, 0), partial(f, 0, 2)};
}

double normalized_discriminant(const Mat2& w) {
  const double tr = w[0][0] + w[1][1];
  const double det = w[0][0] * w[1][1] - w[0][1] * w[1][0];
  double n = 0.0;
  for (const auto& row : w)
    for (double v : row) n = std::max(n, std::abs(v));
  return n > 0.0 ? (tr * tr - 4.0 * det) / (n * n) : 0.0;
}

}  // namespace

std::string Order::to_string() const {
  if (infinite) return "Infinite";
  if (exceeds_max) return ">" + std::to_string(value - 1);
  return std::to_string(value);
}

Order order_at(const Surface& surface, double s, int max_order, double tol) {
  Order r;
  if (!surface.metric().is_lorentzian()) {
    r.value = 2;
    r.note = "Euclidean surface: the order is 2 by definition";
    return r;
  }
  if (max_order < 2 || max_order + 1 > kDefaultJetOrder)
    throw std::invalid_argument("order_at: max_order must lie in [2, jet capacity - 1]");
  const std::vector<double> c = delta_t_jet(surface, s, max_order);
  double scale = 1.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  for (int k = 0; k <= max_order; ++k)
    if (std::abs(c[k]) > tol * scale) {
      r.value = k;
      return r;
    }
  r.infinite = true;
  return r;
}

Order order_at(const Edge& edge, double s, int max_order, double tol) {
  Order r = order_at(static_cast<const Surface&>(edge), s, max_order, tol);
  if (!r.infinite || edge.family() != EdgeFamily::ClosedForm) return r;
  using V = Expr::Var;
  const auto& f = edge.spec().closed_form;
  const Metric m = edge.metric();
  std::array<Expr, 3> fs, ft;
  for (int i = 0; i < 3; ++i) {
    fs[i] = f[i].diff(V::S);
    ft[i] = f[i].diff(V::T);
  }
  auto ip = [&](const std::array<Expr, 3>& a, const std::array<Expr, 3>& b) {
    const auto d = m.diagonal();
    return d[0] * a[0] * b[0] + d[1] * a[1] * b[1] + d[2] * a[2] * b[2];
  };
  const Expr delta = ip(fs, fs) * ip(ft, ft) - ip(fs, ft) * ip(fs, ft);
  for (double t : {-0.2, -0.1, -0.05, 0.05, 0.1, 0.2}) {
    const Vec3 a(fs[0].eval(s, t), fs[1].eval(s, t), fs[2].eval(s, t));
    const Vec3 b(ft[0].eval(s, t), ft[1].eval(s, t), ft[2].eval(s, t));
    const double scale = norm(a) * norm(b);
    if (std::abs(delta.eval(s, t)) > tol * std::max(1.0, scale * scale)) {
      r.infinite = false;
      r.exceeds_max = true;
      r.value = max_order + 1;
      r.note = "jet coefficients vanish up to max_order but Delta is not flat off the axis";
      return r;
    }
  }
  r.note = "closed-form Delta vanishes at off-axis samples";
  return r;
}

double d_C(const Surface& surface, double s) {
  const AxisData a = axis_data(surface, s);
  return det3(a.gs, a.ftt, a.gss);
}

int sigma_C(const Surface& surface, double s) {
  const AxisData a = axis_data(surface, s);
  const double d = det3(a.gs, a.ftt, a.gss);
  if (std::abs(d) <= 1e-9 * norm(a.gs) * norm(a.ftt) * norm(a.gss)) return 0;
  return d > 0 ? 1 : -1;
}

std::string to_string(PointType p) {
  switch (p) {
    case PointType::CuspidalEdge: return "CuspidalEdge";
    case PointType::CuspidalCrossCap: return "CuspidalCrossCap";
    case PointType::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string to_string(Convexity c) {
  switch (c) {
    case Convexity::Convex: return "Convex";
    case Convexity::Concave: return "Concave";
    case Convexity::Flat: return "Flat";
  }
  return "?";
}

std::string to_string(UmbilicKind k) { return k == UmbilicKind::Umbilic ? "Umbilic" : "QuasiUmbilic"; }

double estimate_mu0(const Surface& surface, double s, double step) {
  Vec3 gs, ftt, fttt;
  for (int c = 0; c < 3; ++c) {
    auto g = [&](double u, double v) { return surface.point(u, v)[c]; };
    gs[c] = fd_oracle(g, s, 0.0, 1, 0, step);
    ftt[c] = fd_oracle(g, s, 0.0, 0, 2, step);
    fttt[c] = fd_oracle(g, s, 0.0, 0, 3, step);
  }
  const double cr = norm(euclidean_cross(gs, ftt));
  return 0.5 * std::pow(norm(gs), 1.5) * det3(gs, ftt, fttt) / std::pow(cr, 2.5);
}

PointType singular_type(const Edge& edge, double s, double tol, bool unsafe_estimate) {
  double mu0 = 0.0, dmu0 = 0.0;
  if (edge.has_mu()) {
    const Expr m0 = edge.spec().mu.coefficient(0);
    mu0 = m0.eval(s);
    dmu0 = m0.diff(Expr::Var::S).eval(s);
  } else if (unsafe_estimate) {
    constexpr double h = 1e-2;
    mu0 = estimate_mu0(edge, s);
    dmu0 = (estimate_mu0(edge, s + h) - estimate_mu0(edge, s - h)) / (2 * h);
    tol = std::max(tol, 1e-5);
  } else {
    return PointType::Undetermined;
  }
  if (std::abs(mu0) > tol) return PointType::CuspidalEdge;
  if (std::abs(dmu0) > tol) return PointType::CuspidalCrossCap;
  return PointType::Undetermined;
}

CausalClass causal_type_at(const Surface& surface, double s, double t) {
  const Metric m = surface.metric();
  if (!m.is_lorentzian()) throw std::invalid_argument("causal_type_at: the surface is Euclidean");
  const Jet3 f = surface.jet(s, t, 2);
  const Vec3 fs = partial(f, 1, 0);
  const Vec3 second = t == 0.0 ? partial(f, 0, 2) : partial(f, 0, 1);
  const Vec3 nu = cross(m, fs, second);
  const CausalClass c = causal_class(m, nu, 1e-10 * dot(nu, nu));
  switch (c) {
    case CausalClass::Timelike: return CausalClass::Spacelike;
    case CausalClass::Spacelike: return CausalClass::Timelike;
    default: return CausalClass::Lightlike;
  }
}

SingularPointReport edge_invariants(const Surface& surface, double s) {
  SingularPointReport r;
  r.s = s;
  const Metric m = surface.metric();
  const AxisData a = axis_data(surface, s);
  const double gg = dot(a.gs, a.gs);
  r.d_C = det3(a.gs, a.ftt, a.gss);
  r.sigma_C = sigma_C(surface, s);
  r.order = order_at(surface, s);

  const Vec3 de = a.ftt - (dot(a.ftt, a.gs) / gg) * a.gs;
  r.D_E = de / norm(de);
  const Vec3 ne_raw = euclidean_cross(a.gs, a.ftt);
  const Vec3 ne = ne_raw / norm(ne_raw);
  r.kappa_s_E = dot(a.gss, r.D_E) / gg;
  r.kappa_nu_E = dot(a.gss, ne) / gg;
  const double band = 1e-9 * std::max(1.0, norm(a.gss) / gg);
  r.convexity = r.kappa_s_E > band ? Convexity::Convex : (r.kappa_s_E < -band ? Convexity::Concave : Convexity::Flat);

  if (m.is_lorentzian()) {
    const Vec3 nu = cross(m, a.gs, a.ftt);
    const CausalClass nc = causal_class(m, nu, 1e-10 * dot(nu, nu));
    r.causal = nc;
    const double g2 = inner(m, a.gs, a.gs);
    const double tol_g = 1e-10 * gg;
    if (std::abs(g2) > tol_g) {
      const Vec3 dl = a.ftt - (inner(m, a.ftt, a.gs) / g2) * a.gs;
      const double dl2 = inner(m, dl, dl);
      const double nu2 = inner(m, nu, nu);
      if (std::abs(dl2) > 1e-10 * dot(dl, dl) && std::abs(nu2) > 1e-10 * dot(nu, nu)) {
        const Vec3 dunit = dl / std::sqrt(std::abs(dl2));
        const Vec3 nunit = nu / std::sqrt(std::abs(nu2));
        r.D_L = dunit;
        const double speed2 = std::abs(g2);
        r.kappa_s_L = inner(m, a.gss, dunit) / (inner(m, dunit, dunit) * speed2);
        r.kappa_nu_L = inner(m, a.gss, nunit) / (inner(m, nunit, nunit) * speed2);
      }
    }
  }
  return r;
}

SingularPointReport edge_invariants(const Edge& edge, double s) {
  SingularPointReport r = edge_invariants(static_cast<const Surface&>(edge), s);
  r.order = order_at(edge, s);
  r.point_type = singular_type(edge, s);
  return r;
}

std::vector<UmbilicFinding> umbilic_scan(const Surface& surface, const GridSpec& region,
                                         const UmbilicScanOptions& opt) {
  const std::vector<GridSample> grid = evaluate_grid(surface, region, opt.tol_scale);
  const Metric m = surface.metric();
  std::vector<UmbilicFinding> out;
  auto usable = [&](const GridSample& g) { return g.has_curvature && std::abs(g.t) >= opt.t_min; };
  auto gap_of = [](const CurvatureBundle& b) { return std::abs(b.lambda1 - b.lambda2); };
  auto within = [&](const CurvatureBundle& b) {
    return gap_of(b) <= opt.tol * std::max(1.0, std::abs(b.lambda1) + std::abs(b.lambda2));
  };
  auto kind_of = [](const CurvatureBundle& b) {
    return b.is_quasi_diagonal ? UmbilicKind::Umbilic : UmbilicKind::QuasiUmbilic;
  };
  for (const GridSample& g : grid)
    if (usable(g) && within(g.bundle)) out.push_back({g.s, g.t, kind_of(g.bundle), gap_of(g.bundle)});

  auto refine = [&](const GridSample& a, const GridSample& b) {
    double da = normalized_discriminant(a.bundle.W_tilde);
    const double db = normalized_discriminant(b.bundle.W_tilde);
    if (da == 0.0 || db == 0.0 || (da > 0) == (db > 0)) return;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < opt.bisection_iterations; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double s = a.s + mid * (b.s - a.s), t = a.t + mid * (b.t - a.t);
      const double dm = normalized_discriminant(curvature_bundle_from_forms(fund_forms(surface, s, t), m).W_tilde);
      if ((dm > 0) == (da > 0)) {
        lo = mid;
        da = dm;
      } else {
        hi = mid;
      }
    }
    const double mid = 0.5 * (lo + hi);
    const double s = a.s + mid * (b.s - a.s), t = a.t + mid * (b.t - a.t);
    const FundForms ff = fund_forms(surface, s, t);
    if (is_lightlike_delta(ff, opt.tol_scale)) return;
    const CurvatureBundle cb = curvature_bundle_from_forms(ff, m);
    out.push_back({s, t, kind_of(cb), gap_of(cb)});
  };
  for (int i = 0; i < region.ns; ++i)
    for (int j = 0; j < region.nt; ++j) {
      const GridSample& g = grid[region.index(i, j)];
      if (!usable(g)) continue;
      if (i + 1 < region.ns && usable(grid[region.index(i + 1, j)])) refine(g, grid[region.index(i + 1, j)]);
      if (j + 1 < region.nt) {
        const GridSample& h = grid[region.index(i, j + 1)];
        if (usable(h) && (g.t > 0) == (h.t > 0)) refine(g, h);
      }
    }
  return out;
}

}  // namespace cuspidal
