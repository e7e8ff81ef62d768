#include "cuspidal/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cuspidal {

namespace {

Vec3 column_times(const Frame& f, const Mat3& k, int col) {
  return k[0][col] * f[0] + k[1][col] * f[1] + k[2][col] * f[2];
}

Frame product(const Frame& f, const Mat3& k) {
  return {column_times(f, k, 0), column_times(f, k, 1), column_times(f, k, 2)};
}

void gram_schmidt(const FrameData& d, Frame& f) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < i; ++j) f[i] -= (d.eps[j] * inner(d.metric, f[i], f[j])) * f[j];
    const double n2 = std::abs(inner(d.metric, f[i], f[i]));
    if (n2 <= 0.0) throw std::runtime_error("frame: degenerate column during re-orthonormalization");
    f[i] = f[i] / std::sqrt(n2);
  }
}

struct State {
  Frame f;
  Vec3 g;
};

State derivative(const FrameData& d, const Expr& dphi, double s, const State& x) {
  const Mat3 k = connection_matrix(d, s);
  State r;
  r.f = product(x.f, k);
  r.g = x.f[0];
  if (d.has_lift) r.g += dphi.eval(s) * x.f[2];
  return r;
}

State axpy(const State& x, double h, const State& k) {
  State r = x;
  for (int i = 0; i < 3; ++i) r.f[i] += h * k.f[i];
  r.g += h * k.g;
  return r;
}

State rk4(const FrameData& d, const Expr& dphi, double s, const State& x, double h) {
  const State k1 = derivative(d, dphi, s, x);
  const State k2 = derivative(d, dphi, s + 0.5 * h, axpy(x, 0.5 * h, k1));
  const State k3 = derivative(d, dphi, s + 0.5 * h, axpy(x, 0.5 * h, k2));
  const State k4 = derivative(d, dphi, s + h, axpy(x, h, k3));
  State r = x;
  for (int i = 0; i < 3; ++i) r.f[i] += (h / 6.0) * (k1.f[i] + 2.0 * k2.f[i] + 2.0 * k3.f[i] + k4.f[i]);
  r.g += (h / 6.0) * (k1.g + 2.0 * k2.g + 2.0 * k3.g + k4.g);
  gram_schmidt(d, r.f);
  return r;
}

Vec3 vec_of(const std::array<Expr, 3>& e, double s) { return {e[0].eval(s), e[1].eval(s), e[2].eval(s)}; }

}  // namespace

Mat3 connection_matrix(const FrameData& d, double s) {
  const double k1 = d.k1.eval(s), k2 = d.k2.eval(s), om = d.Omega.eval(s);
  const auto& e = d.eps;
  Mat3 k{};
  k[1][0] = k1;
  k[2][0] = k2;
  k[2][1] = om;
  k[0][1] = -e[0] * e[1] * k1;
  k[0][2] = -e[0] * e[2] * k2;
  k[1][2] = -e[1] * e[2] * om;
  return k;
}

Frame default_initial_frame(const FrameData& d) {
  Frame f;
  if (!d.metric.is_lorentzian()) return {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
  int next = 0;
  const Vec3 spacelike[2] = {Vec3(1, 0, 0), Vec3(0, 1, 0)};
  int timelike = 0;
  for (int i = 0; i < 3; ++i) {
    if (d.eps[i] < 0) {
      f[i] = Vec3(0, 0, 1);
      ++timelike;
    } else {
      if (next > 1) throw std::invalid_argument("default_initial_frame: epsilons need exactly one timelike slot");
      f[i] = spacelike[next++];
    }
  }
  if (timelike != 1) throw std::invalid_argument("default_initial_frame: epsilons need exactly one timelike slot");
  if (det3(f[0], f[1], f[2]) < 0) f[2] = -f[2];
  return f;
}

double orthonormality_defect(const FrameData& d, const Frame& f) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double target = i == j ? d.eps[i] : 0.0;
      worst = std::max(worst, std::abs(inner(d.metric, f[i], f[j]) - target));
    }
  return worst;
}

FrameField FrameField::integrate(const FrameData& data, const Frame& f0, double s0, const Vec3& origin, double s_min,
                                 double s_max, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("integrate_frame: step must be positive");
  if (!(s_min <= s0 && s0 <= s_max)) throw std::invalid_argument("integrate_frame: s0 outside the range");
  if (orthonormality_defect(data, f0) > 1e-8)
    throw std::invalid_argument("integrate_frame: initial frame is not orthonormal for the declared epsilons");
  FrameField ff;
  ff.data_ = data;
  ff.s_min_ = s_min;
  ff.s_max_ = s_max;
  ff.step_ = step;
  const Expr dphi = data.phi.diff(Expr::Var::S);
  const int back = static_cast<int>(std::ceil((s0 - s_min) / step - 1e-9));
  const int fwd = static_cast<int>(std::ceil((s_max - s0) / step - 1e-9));
  std::vector<State> lo, hi;
  State x{f0, origin};
  for (int k = 0; k < back; ++k) {
    const double s = s0 - k * step;
    const double h = -std::min(step, s - s_min);
    x = rk4(data, dphi, s, x, h);
    lo.push_back(x);
  }
  x = State{f0, origin};
  hi.push_back(x);
  for (int k = 0; k < fwd; ++k) {
    const double s = s0 + k * step;
    const double h = std::min(step, s_max - s);
    x = rk4(data, dphi, s, x, h);
    hi.push_back(x);
  }
  for (int k = back - 1; k >= 0; --k) {
    ff.grid_.push_back(std::max(s_min, s0 - (k + 1) * step));
    ff.frames_.push_back(lo[k].f);
    ff.gammas_.push_back(lo[k].g);
  }
  for (int k = 0; k <= fwd; ++k) {
    ff.grid_.push_back(std::min(s_max, s0 + k * step));
    ff.frames_.push_back(hi[k].f);
    ff.gammas_.push_back(hi[k].g);
  }
  return ff;
}

FrameField FrameField::closed_form(const FrameData& data, const std::array<std::array<Expr, 3>, 3>& columns,
                                   const std::array<Expr, 3>& gamma) {
  FrameField ff;
  ff.data_ = data;
  ff.closed_ = true;
  ff.columns_ = columns;
  ff.gamma_expr_ = gamma;
  ff.s_min_ = -std::numeric_limits<double>::infinity();
  ff.s_max_ = std::numeric_limits<double>::infinity();
  return ff;
}

void FrameField::state_at(double s, Frame& f, Vec3& g) const {
  if (closed_) {
    for (int i = 0; i < 3; ++i) f[i] = vec_of(columns_[i], s);
    g = vec_of(gamma_expr_, s);
    return;
  }
  const auto it = std::lower_bound(grid_.begin(), grid_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - grid_.begin());
  if (i == grid_.size()) --i;
  if (i > 0 && std::abs(grid_[i - 1] - s) < std::abs(grid_[i] - s)) --i;
  State x{frames_[i], gammas_[i]};
  double cur = grid_[i];
  if (cur == s) {
    f = x.f;
    g = x.g;
    return;
  }
  const Expr dphi = data_.phi.diff(Expr::Var::S);
  while (cur != s) {
    const double h = s > cur ? std::min(step_, s - cur) : -std::min(step_, cur - s);
    x = rk4(data_, dphi, cur, x, h);
    cur = (std::abs(s - (cur + h)) < 1e-15) ? s : cur + h;
  }
  f = x.f;
  g = x.g;
}

Frame FrameField::frame_at(double s) const {
  Frame f;
  Vec3 g;
  state_at(s, f, g);
  return f;
}

Vec3 FrameField::gamma_at(double s) const {
  Frame f;
  Vec3 g;
  state_at(s, f, g);
  return g;
}

FrameJet FrameField::jet(double s0, int order) const {
  if (order < 0 || order > kMaxFrameJetOrder) throw std::invalid_argument("frame_jet: order exceeds jet capacity");
  FrameJet out;
  out.s0 = s0;
  if (closed_) {
    for (int c = 0; c < 3; ++c) {
      std::array<Jet2, 3> comp;
      for (int r = 0; r < 3; ++r) comp[r] = columns_[c][r].lift(s0, 0.0, order);
      for (int n = 0; n <= order; ++n)
        out.a[c].push_back(Vec3(comp[0].at(n, 0), comp[1].at(n, 0), comp[2].at(n, 0)));
    }
    std::array<Jet2, 3> comp;
    for (int r = 0; r < 3; ++r) comp[r] = gamma_expr_[r].lift(s0, 0.0, order);
    for (int n = 0; n <= order; ++n) out.gamma.push_back(Vec3(comp[0].at(n, 0), comp[1].at(n, 0), comp[2].at(n, 0)));
    return out;
  }
  Frame f0;
  Vec3 g0;
  state_at(s0, f0, g0);
  const Jet2 k1 = data_.k1.lift(s0, 0.0, order), k2 = data_.k2.lift(s0, 0.0, order),
             om = data_.Omega.lift(s0, 0.0, order), dphi = data_.phi.diff(Expr::Var::S).lift(s0, 0.0, order);
  std::vector<Mat3> kn(order + 1);
  const auto& e = data_.eps;
  for (int m = 0; m <= order; ++m) {
    Mat3 k{};
    k[1][0] = k1.at(m, 0);
    k[2][0] = k2.at(m, 0);
    k[2][1] = om.at(m, 0);
    k[0][1] = -e[0] * e[1] * k[1][0];
    k[0][2] = -e[0] * e[2] * k[2][0];
    k[1][2] = -e[1] * e[2] * k[2][1];
    kn[m] = k;
  }
  std::vector<Frame> fn{f0};
  for (int n = 0; n < order; ++n) {
    Frame next{Vec3(), Vec3(), Vec3()};
    for (int j = 0; j <= n; ++j) {
      const Frame p = product(fn[j], kn[n - j]);
      for (int c = 0; c < 3; ++c) next[c] += p[c];
    }
    for (int c = 0; c < 3; ++c) next[c] = next[c] / static_cast<double>(n + 1);
    fn.push_back(next);
  }
  for (int c = 0; c < 3; ++c)
    for (int n = 0; n <= order; ++n) out.a[c].push_back(fn[n][c]);
  out.gamma.push_back(g0);
  for (int n = 0; n < order; ++n) {
    Vec3 d = fn[n][0];
    if (data_.has_lift)
      for (int j = 0; j <= n; ++j) d += dphi.at(j, 0) * fn[n - j][2];
    out.gamma.push_back(d / static_cast<double>(n + 1));
  }
  return out;
}

FrameField frenet_of(const std::array<Expr, 3>& c) {
  using V = Expr::Var;
  const std::array<Expr, 3> t{c[0].diff(V::S), c[1].diff(V::S), c[2].diff(V::S)};
  const std::array<Expr, 3> tp{t[0].diff(V::S), t[1].diff(V::S), t[2].diff(V::S)};
  const Expr kappa = sqrt(tp[0] * tp[0] + tp[1] * tp[1] + tp[2] * tp[2]);
  const std::array<Expr, 3> n{tp[0] / kappa, tp[1] / kappa, tp[2] / kappa};
  const std::array<Expr, 3> b{t[1] * n[2] - t[2] * n[1], t[2] * n[0] - t[0] * n[2], t[0] * n[1] - t[1] * n[0]};
  const std::array<Expr, 3> np{n[0].diff(V::S), n[1].diff(V::S), n[2].diff(V::S)};
  FrameData d;
  d.eps = {1, 1, 1};
  d.metric = Metric::euclidean();
  d.k1 = kappa;
  d.k2 = Expr(0.0);
  d.Omega = np[0] * b[0] + np[1] * b[1] + np[2] * b[2];
  return FrameField::closed_form(d, {t, n, b}, c);
}

FrameField lightlike_lift(const std::array<Expr, 2>& g, const Expr& phi) {
  using V = Expr::Var;
  const Expr x1 = g[0].diff(V::S), y1 = g[1].diff(V::S);
  FrameData d;
  d.eps = {1, 1, -1};
  d.metric = Metric::lorentzian();
  d.k1 = x1 * g[1].diff(V::S, 2) - y1 * g[0].diff(V::S, 2);
  d.k2 = Expr(0.0);
  d.Omega = Expr(0.0);
  d.phi = phi;
  d.has_lift = true;
  return FrameField::closed_form(d, {{{x1, y1, Expr(0.0)}, {-y1, x1, Expr(0.0)}, {Expr(0.0), Expr(0.0), Expr(1.0)}}},
                                 {g[0], g[1], phi});
}

FrameField builtin_frame(const std::string& name, const std::map<std::string, double>& params) {
  auto get = [&](const char* key, double def) {
    const auto it = params.find(key);
    return it == params.end() ? def : it->second;
  };
  const Expr s = Expr::s();
  if (name == "circle") {
    const double r = get("radius", 1.0);
    if (!(r > 0)) throw std::invalid_argument("builtin_frame: radius must be positive");
    FrameData d;
    d.k1 = Expr(1.0 / r);
    const Expr a = s / r;
    return FrameField::closed_form(
        d, {{{-sin(a), cos(a), Expr(0.0)}, {-cos(a), -sin(a), Expr(0.0)}, {Expr(0.0), Expr(0.0), Expr(1.0)}}},
        {r * cos(a), r * sin(a), Expr(0.0)});
  }
  if (name == "helix" || name == "frenet_of") {
    const double r = get("radius", 1.0), p = get("pitch", 1.0);
    if (!(r > 0)) throw std::invalid_argument("builtin_frame: radius must be positive");
    const double c = std::sqrt(r * r + p * p);
    const Expr a = s / c;
    const std::array<Expr, 3> curve{r * cos(a), r * sin(a), p * a};
    if (name == "frenet_of") return frenet_of(curve);
    FrameData d;
    d.k1 = Expr(r / (c * c));
    d.Omega = Expr(p / (c * c));
    return FrameField::closed_form(d,
                                   {{{-r / c * sin(a), r / c * cos(a), Expr(p / c)},
                                     {-cos(a), -sin(a), Expr(0.0)},
                                     {p / c * sin(a), -p / c * cos(a), Expr(r / c)}}},
                                   curve);
  }
  if (name == "lightlike_lift") {
    const double r = get("radius", 1.0);
    if (!(r > 0)) throw std::invalid_argument("builtin_frame: radius must be positive");
    return lightlike_lift({r * cos(s / r), r * sin(s / r)}, s);
  }
  throw std::invalid_argument("builtin_frame: unknown name '" + name + "'");
}

}  // namespace cuspidal
