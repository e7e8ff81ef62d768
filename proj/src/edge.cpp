#include "cuspidal/edge.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cuspidal/numerics.hpp"

namespace cuspidal {

namespace {

constexpr int kQuadNodes = 16;
constexpr double kQuadPanel = 0.25;

Jet2 s_only_jet(const std::vector<Vec3>& coeffs, int comp, int order, double s0, double t0) {
  Jet2 j(order, s0, t0);
  for (int i = 0; i <= order && i < static_cast<int>(coeffs.size()); ++i) j.at(i, 0) = coeffs[i][comp];
  return j;
}

Jet3 frame_column(const FrameJet& fj, int col, int order, double s0, double t0) {
  const auto& c = col < 0 ? fj.gamma : fj.a[col];
  return {s_only_jet(c, 0, order, s0, t0), s_only_jet(c, 1, order, s0, t0), s_only_jet(c, 2, order, s0, t0)};
}

}  // namespace

std::string to_string(EdgeFamily f) {
  switch (f) {
    case EdgeFamily::E: return "E";
    case EdgeFamily::T: return "T";
    case EdgeFamily::Ss: return "Ss";
    case EdgeFamily::St: return "St";
    case EdgeFamily::Sl: return "Sl";
    case EdgeFamily::LightGeneral: return "LightGeneral";
    case EdgeFamily::OrderFour: return "OrderFour";
    case EdgeFamily::ClosedForm: return "ClosedForm";
  }
  return "?";
}

EdgeFamily edge_family_from_string(const std::string& name) {
  for (EdgeFamily f : {EdgeFamily::E, EdgeFamily::T, EdgeFamily::Ss, EdgeFamily::St, EdgeFamily::Sl,
                       EdgeFamily::LightGeneral, EdgeFamily::OrderFour, EdgeFamily::ClosedForm})
    if (to_string(f) == name) return f;
  if (name == "L2") return EdgeFamily::LightGeneral;
  if (name == "L4") return EdgeFamily::OrderFour;
  throw std::invalid_argument("unknown edge family '" + name + "'");
}

std::array<int, 3> family_epsilons(EdgeFamily f) {
  switch (f) {
    case EdgeFamily::E: return {1, 1, 1};
    case EdgeFamily::T: return {-1, 1, 1};
    case EdgeFamily::St: return {1, -1, 1};
    default: return {1, 1, -1};
  }
}

Metric family_metric(EdgeFamily f) {
  return f == EdgeFamily::E ? Metric::euclidean() : Metric::lorentzian();
}

bool family_is_hyperbolic(EdgeFamily f) { return f == EdgeFamily::Ss || f == EdgeFamily::St; }

bool family_is_lightlike(EdgeFamily f) { return f == EdgeFamily::LightGeneral || f == EdgeFamily::OrderFour; }

std::array<Jet2, 2> Edge::cusp_jets(double s, double t, int order) const {
  const bool hyp = family_is_hyperbolic(spec_.family);
  auto integrand = [&](double u, int ord) {
    const Jet2 lam = lambda_.lift(s, u, ord);
    const Jet2 uu = Jet2::variable_t(ord, s, u);
    return hyp ? std::array<Jet2, 2>{uu * cosh(lam), uu * sinh(lam)}
               : std::array<Jet2, 2>{uu * cos(lam), uu * sin(lam)};
  };
  const auto g = integrand(t, order);
  std::array<Jet2, 2> r{g[0].antiderivative_t(), g[1].antiderivative_t()};
  if (t != 0.0) {
    struct Cols {
      std::vector<double> a, b;
      Cols& operator+=(const Cols& o) {
        for (std::size_t i = 0; i < a.size(); ++i) {
          a[i] += o.a[i];
          b[i] += o.b[i];
        }
        return *this;
      }
      Cols operator*(double c) const {
        Cols r = *this;
        for (std::size_t i = 0; i < a.size(); ++i) {
          r.a[i] *= c;
          r.b[i] *= c;
        }
        return r;
      }
    };
    const Cols base = integrate_panels(
        [&](double u) {
          const auto gu = integrand(u, order);
          Cols c{std::vector<double>(order + 1), std::vector<double>(order + 1)};
          for (int i = 0; i <= order; ++i) {
            c.a[i] = gu[0].at(i, 0);
            c.b[i] = gu[1].at(i, 0);
          }
          return c;
        },
        0.0, t, kQuadNodes, kQuadPanel);
    for (int i = 0; i <= order; ++i) {
      r[0].at(i, 0) += base.a[i];
      r[1].at(i, 0) += base.b[i];
    }
  }
  return r;
}

Jet3 Edge::jet(double s, double t, int order) const {
  if (spec_.family == EdgeFamily::ClosedForm) {
    const auto& c = spec_.closed_form;
    return {c[0].lift(s, t, order), c[1].lift(s, t, order), c[2].lift(s, t, order)};
  }
  const FrameJet fj = frame_->jet(s, order);
  Jet2 x, y;
  if (spec_.xy) {
    x = (*spec_.xy)[0].lift(s, t, order);
    y = (*spec_.xy)[1].lift(s, t, order);
  } else {
    const auto ab = cusp_jets(s, t, order);
    const Jet2 th = spec_.theta.lift(s, t, order);
    const Jet2 c = cos(th), sn = sin(th);
    x = c * ab[0] + sn * ab[1];
    y = c * ab[1] - sn * ab[0];
  }
  const Jet3 g = frame_column(fj, -1, order, s, t), a1 = frame_column(fj, 1, order, s, t),
             a2 = frame_column(fj, 2, order, s, t);
  Jet3 f;
  for (int i = 0; i < 3; ++i) f[i] = g[i] + x * a1[i] + y * a2[i];
  return f;
}

Edge build_edge(const EdgeSpec& in) {
  Edge e;
  e.spec_ = in;
  EdgeSpec& sp = e.spec_;
  if (sp.s_min > sp.s_max) throw std::invalid_argument("build_edge: empty s range");
  sp.s_min = std::min(sp.s_min, sp.s0);
  sp.s_max = std::max(sp.s_max, sp.s0);
  const EdgeFamily fam = sp.family;
  if (fam == EdgeFamily::ClosedForm) {
    e.metric_ = Metric(sp.closed_form_metric);
  } else {
    e.metric_ = family_metric(fam);
    if (sp.mu.empty()) throw std::invalid_argument("build_edge: mu_0 is required");
    e.lambda_ = sp.mu.lambda();
    switch (fam) {
      case EdgeFamily::E:
      case EdgeFamily::T:
      case EdgeFamily::Ss:
      case EdgeFamily::St:
        for (double s : {sp.s_min, sp.s0, sp.s_max, 0.5 * (sp.s_min + sp.s_max)})
          if (std::abs(sp.theta.eval(s)) > 1e-14)
            throw DegenerateSpec("build_edge: theta must vanish identically for family " + to_string(fam), s);
        break;
      case EdgeFamily::Sl:
        if (std::abs(sp.theta.eval(sp.s0) - std::numbers::pi / 4) > 1e-12)
          throw DegenerateSpec("build_edge: S_l needs theta(s0) = pi/4", sp.s0);
        break;
      case EdgeFamily::OrderFour:
        if (sp.sigma != 1 && sp.sigma != -1) throw std::invalid_argument("build_edge: sigma must be +1 or -1");
        sp.theta = Expr(sp.sigma == 1 ? 0.0 : std::numbers::pi);
        break;
      default:
        break;
    }
    std::shared_ptr<FrameField> field;
    if (sp.builtin_frame) {
      field = std::make_shared<FrameField>(builtin_frame(*sp.builtin_frame, sp.builtin_params));
      if (field->data().eps != family_epsilons(fam) || field->data().metric != e.metric_)
        throw std::invalid_argument("build_edge: builtin frame '" + *sp.builtin_frame + "' does not fit family " +
                                    to_string(fam));
      sp.k1 = field->data().k1;
      sp.k2 = field->data().k2;
      sp.Omega = field->data().Omega;
      if (family_is_lightlike(fam)) sp.phi = field->data().phi;
    } else {
      FrameData d;
      d.eps = family_epsilons(fam);
      d.metric = e.metric_;
      d.k1 = sp.k1;
      if (family_is_lightlike(fam)) {
        d.k2 = Expr(0.0);
        d.Omega = Expr(0.0);
        d.phi = fam == EdgeFamily::OrderFour ? Expr::s() : sp.phi;
        d.has_lift = true;
        sp.k2 = d.k2;
        sp.Omega = d.Omega;
        sp.phi = d.phi;
      } else {
        d.k2 = sp.k2;
        d.Omega = sp.Omega;
      }
      const Frame f0 = sp.initial_frame ? *sp.initial_frame : default_initial_frame(d);
      field = std::make_shared<FrameField>(FrameField::integrate(d, f0, sp.s0, sp.origin, sp.s_min, sp.s_max));
    }
    e.frame_ = field;
  }
  if (!sp.generic_surface) {
    constexpr int kSamples = 21;
    for (int i = 0; i < kSamples; ++i) {
      const double s = sp.s_min + (sp.s_max - sp.s_min) * i / (kSamples - 1);
      const Jet3 f = e.jet(s, 0.0, 2);
      const Vec3 gs = partial(f, 1, 0), ft = partial(f, 0, 1), ftt = partial(f, 0, 2);
      const double scale = std::max(1.0, norm(gs) * norm(ftt));
      if (norm(ft) > 1e-10 * std::max(1.0, norm(gs)))
        throw DegenerateSpec("build_edge: f_t(s,0) does not vanish at s = " + std::to_string(s), s);
      if (norm(euclidean_cross(gs, ftt)) <= 1e-10 * scale)
        throw DegenerateSpec("build_edge: f_tt(s,0) is parallel to Gamma'(s) at s = " + std::to_string(s), s);
    }
  }
  return e;
}

Jet3 ReparamSurface::jet(double s, double t, int order) const {
  const Jet2 u = u_.lift(s, t, order), v = v_.lift(s, t, order);
  const Jet3 f = base_->jet(u.value(), v.value(), order);
  const Jet2 du = u - u.value(), dv = v - v.value();
  return {compose(f[0], du, dv), compose(f[1], du, dv), compose(f[2], du, dv)};
}

FundForms fund_forms_from_jet(const Jet3& f, const Metric& m) {
  FundForms r;
  r.f_s = partial(f, 1, 0);
  r.f_t = partial(f, 0, 1);
  const Vec3 fss = partial(f, 2, 0), fst = partial(f, 1, 1), ftt = partial(f, 0, 2);
  r.E = inner(m, r.f_s, r.f_s);
  r.F = inner(m, r.f_s, r.f_t);
  r.G = inner(m, r.f_t, r.f_t);
  r.Ltil = det3(r.f_s, r.f_t, fss);
  r.Mtil = det3(r.f_s, r.f_t, fst);
  r.Ntil = det3(r.f_s, r.f_t, ftt);
  r.Delta = r.E * r.G - r.F * r.F;
  r.nu_tilde = cross(m, r.f_s, r.f_t);
  return r;
}

FundForms fund_forms(const Surface& surface, double s, double t) {
  return fund_forms_from_jet(surface.jet(s, t, 2), surface.metric());
}

bool is_lightlike_delta(const FundForms& ff, double tol_scale) {
  const double scale = norm(ff.f_s) * norm(ff.f_t);
  return std::abs(ff.Delta) <= 1e-12 * tol_scale * scale * scale;
}

std::array<std::complex<double>, 2> eigenvalues(const Mat2& m) {
  return eigenvalues(m, m[0][0] * m[1][1] - m[0][1] * m[1][0]);
}

std::array<std::complex<double>, 2> eigenvalues(const Mat2& m, double det) {
  const double tr = m[0][0] + m[1][1];
  const double half = 0.5 * (m[0][0] - m[1][1]);
  const double disc = half * half + m[0][1] * m[1][0];
  std::complex<double> a, b;
  if (disc >= 0) {
    const double r = std::sqrt(disc);
    const double big = tr >= 0 ? 0.5 * tr + r : 0.5 * tr - r;
    a = big;
    b = big != 0.0 ? det / big : 0.5 * tr - (tr >= 0 ? r : -r);
  } else {
    const double im = std::sqrt(-disc);
    a = {0.5 * tr, im};
    b = {0.5 * tr, -im};
  }
  if (std::abs(b) > std::abs(a)) std::swap(a, b);
  return {a, b};
}

CurvatureBundle curvature_bundle_from_forms(const FundForms& ff, const Metric& m) {
  CurvatureBundle b;
  b.forms = ff;
  const double E = ff.E, F = ff.F, G = ff.G, L = ff.Ltil, M = ff.Mtil, N = ff.Ntil, D = ff.Delta;
  b.W_tilde = {{{G * L - F * M, G * M - F * N}, {-F * L + E * M, -F * M + E * N}}};
  const double scale = D * std::sqrt(std::abs(D));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) b.W[i][j] = b.W_tilde[i][j] / scale;
  const double k = (L * N - M * M) / (D * D);
  b.K = m.is_lorentzian() ? -k : k;
  b.H = (b.W_tilde[0][0] + b.W_tilde[1][1]) / (2.0 * scale);
  b.H_abs = std::abs(b.H);
  const auto ev = eigenvalues(b.W, D * (L * N - M * M) / (scale * scale));
  b.lambda1 = ev[0];
  b.lambda2 = ev[1];
  double wn = 0.0;
  for (const auto& row : b.W_tilde)
    for (double v : row) wn = std::max(wn, std::abs(v));
  b.is_quasi_diagonal =
      std::abs(b.W_tilde[0][1]) <= 1e-10 * wn && std::abs(b.W_tilde[1][0]) <= 1e-10 * wn;
  return b;
}

CurvatureBundle curvature_bundle(const Surface& surface, double s, double t, double tol_scale) {
  const FundForms ff = fund_forms(surface, s, t);
  if (is_lightlike_delta(ff, tol_scale)) throw LightlikePoint(s, t);
  return curvature_bundle_from_forms(ff, surface.metric());
}

FormJets form_jets(const Surface& surface, double s, double t, int order) {
  const Metric m = surface.metric();
  const Jet3 f = surface.jet(s, t, order + 2);
  const Jet3 fs = derivative_s(f), ft = derivative_t(f);
  const Jet3 fss = derivative_s(fs), fst = derivative_t(fs), ftt = derivative_t(ft);
  FormJets r;
  r.E = inner(m, fs, fs).truncated(order);
  r.F = inner(m, fs, ft).truncated(order);
  r.G = inner(m, ft, ft).truncated(order);
  r.L = det3(fs, ft, fss).truncated(order);
  r.M = det3(fs, ft, fst).truncated(order);
  r.N = det3(fs, ft, ftt).truncated(order);
  r.Delta = r.E * r.G - r.F * r.F;
  r.W[0][0] = r.G * r.L - r.F * r.M;
  r.W[0][1] = r.G * r.M - r.F * r.N;
  r.W[1][0] = r.E * r.M - r.F * r.L;
  r.W[1][1] = r.E * r.N - r.F * r.M;
  r.trace = r.W[0][0] + r.W[1][1];
  r.det = r.W[0][0] * r.W[1][1] - r.W[0][1] * r.W[1][0];
  r.discriminant = r.trace * r.trace - 4.0 * r.det;
  return r;
}

std::vector<double> delta_t_jet(const Surface& surface, double s, int order) {
  const Metric m = surface.metric();
  const Jet3 f = surface.jet(s, 0.0, order + 1);
  const Jet3 fs = derivative_s(f), ft = derivative_t(f);
  const Jet2 d = inner(m, fs, fs) * inner(m, ft, ft) - inner(m, fs, ft) * inner(m, fs, ft);
  std::vector<double> r(order + 1);
  for (int k = 0; k <= order; ++k) r[k] = d.at(0, k);
  return r;
}

}  // namespace cuspidal
