#include <doctest.h>

#include "cuspidal/edge.hpp"
#include "cuspidal/gallery.hpp"
#include "support.hpp"

using namespace cuspidal;
using testing_support::uniform;

namespace {

/// Same map, Euclidean ambient metric.
class EuclideanView : public Surface {
 public:
  explicit EuclideanView(const Surface& base) : base_(base) {}
  Jet3 jet(double s, double t, int order) const override { return base_.jet(s, t, order); }
  Metric metric() const override { return Metric::euclidean(); }

 private:
  const Surface& base_;
};

struct Sample {
  double s, t;
};

std::vector<Sample> regular_samples(int n, double s_lo, double s_hi) {
  std::vector<Sample> out;
  for (int i = 0; i < n; ++i) {
    const double a = uniform(0.05, 0.4);
    out.push_back({uniform(s_lo, s_hi), i % 2 ? a : -a});
  }
  return out;
}

std::vector<std::string> lorentz_edges() {
  return {"order3_circle", "order4_helix", "order5_helix", "null_spiral", "type_T",
          "type_Ss",       "type_St",      "type_Sl",      "light_general", "order_four"};
}

}  // namespace

TEST_CASE("nu~ is orthogonal to f_s and f_t and <nu~, nu~> = -Delta") {
  for (const auto& name : lorentz_edges()) {
    const GalleryEntry e = make_example(name);
    const double s0 = e.edge->spec().s0;
    for (const Sample& p : regular_samples(40, s0 - 0.3, s0 + 0.3)) {
      const FundForms ff = fund_forms(*e.edge, p.s, p.t);
      const Metric m = e.edge->metric();
      const double scale = norm(ff.f_s) * norm(ff.f_t);
      INFO(name, " at ", p.s, ", ", p.t);
      CHECK(std::abs(inner(m, ff.nu_tilde, ff.f_s)) <= 1e-10 * std::max(1.0, scale * norm(ff.f_s)));
      CHECK(std::abs(inner(m, ff.nu_tilde, ff.f_t)) <= 1e-10 * std::max(1.0, scale * norm(ff.f_t)));
      if (is_lightlike_delta(ff)) continue;
      CHECK(testing_support::rel_err(norm_sq(m, ff.nu_tilde), -ff.Delta) <= 1e-9);
    }
  }
}

TEST_CASE("Lorentzian and Euclidean Gaussian curvatures have opposite signs") {
  int compared = 0;
  for (const auto& name : lorentz_edges()) {
    const GalleryEntry e = make_example(name);
    const EuclideanView euc(*e.edge);
    const double s0 = e.edge->spec().s0;
    for (const Sample& p : regular_samples(40, s0 - 0.3, s0 + 0.3)) {
      const FundForms ff = fund_forms(*e.edge, p.s, p.t);
      if (is_lightlike_delta(ff)) continue;
      const CurvatureBundle L = curvature_bundle(*e.edge, p.s, p.t);
      const CurvatureBundle E = curvature_bundle(euc, p.s, p.t);
      const double band = 1e-9 * (std::abs(L.K) + std::abs(E.K));
      if (std::abs(L.K) <= band || std::abs(E.K) <= band) continue;
      INFO(name, " at ", p.s, ", ", p.t);
      CHECK((L.K > 0) != (E.K > 0));
      ++compared;
    }
  }
  CHECK(compared > 200);
}

TEST_CASE("principal curvatures: product and sum against K and H") {
  for (const auto& name : lorentz_edges()) {
    const GalleryEntry e = make_example(name);
    const double s0 = e.edge->spec().s0;
    for (const Sample& p : regular_samples(40, s0 - 0.3, s0 + 0.3)) {
      const FundForms ff = fund_forms(*e.edge, p.s, p.t);
      if (is_lightlike_delta(ff)) continue;
      const CurvatureBundle b = curvature_bundle(*e.edge, p.s, p.t);
      const std::complex<double> prod = b.lambda1 * b.lambda2, sum = b.lambda1 + b.lambda2;
      const double want_prod = ff.Delta < 0 ? b.K : -b.K;
      INFO(name, " at ", p.s, ", ", p.t);
      CHECK(std::abs(prod - want_prod) <= 1e-9 * std::max(std::abs(want_prod), std::norm(b.lambda1)));
      CHECK(std::abs(sum - 2 * b.H) <= 1e-9 * std::max({std::abs(b.H), std::abs(b.lambda1), 1e-12}));
      CHECK(b.H_abs == doctest::Approx(std::abs(b.H)));
    }
  }
}

TEST_CASE("Euclidean principal curvatures multiply to K") {
  for (const char* name : {"type_E", "sphere", "cuspidal_cross_cap"}) {
    const GalleryEntry e = make_example(name);
    for (const Sample& p : regular_samples(30, -0.3, 0.3)) {
      const CurvatureBundle b = curvature_bundle(*e.edge, p.s, p.t);
      CHECK(std::abs(b.lambda1 * b.lambda2 - b.K) <= 1e-9 * std::max(1.0, std::abs(b.K)));
      CHECK(std::abs(b.lambda1 + b.lambda2 - 2 * b.H) <= 1e-9 * std::max(1.0, std::abs(b.H)));
    }
  }
}

TEST_CASE("jet partials of f agree with finite differences") {
  for (const auto& info : list_gallery()) {
    const GalleryEntry e = make_example(info.name);
    const double s0 = e.edge->spec().s0;
    int n = 0;
    for (const Sample& p : regular_samples(50, s0 - 0.3, s0 + 0.3)) {
      const Jet3 j = e.edge->jet(p.s, p.t, 2);
      for (int c = 0; c < 3; ++c) {
        auto g = [&](double s, double t) { return e.edge->point(s, t)[c]; };
        for (auto [i, k] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{2, 0}, std::pair{1, 1}, std::pair{0, 2}}) {
          const double want = testing_support::fd4(g, p.s, p.t, i, k, i + k == 1 ? 1e-3 : 5e-3);
          INFO(info.name, " at ", p.s, ", ", p.t, " component ", c, " d", i, ",", k);
          CHECK(testing_support::close_mixed(j[c].partial(i, k), want, 1e-5, 1e-5));
          ++n;
        }
      }
    }
    CHECK(n == 750);
  }
}

TEST_CASE("singular axis: f_t vanishes and Delta vanishes on t = 0") {
  for (const auto& name : lorentz_edges()) {
    const GalleryEntry e = make_example(name);
    if (e.edge->spec().generic_surface) continue;
    for (double s : {-0.2, 0.0, 0.3}) {
      const Jet3 j = e.edge->jet(s, 0.0, 1);
      CHECK(norm(partial(j, 0, 1)) <= 1e-12);
      CHECK(std::abs(fund_forms(*e.edge, s, 0.0).Delta) <= 1e-12);
    }
  }
}

TEST_CASE("reparametrized surface jets follow the chain rule") {
  const GalleryEntry e = make_example("type_T");
  const Expr s = Expr::s(), t = Expr::t();
  const ReparamSurface r(e.edge, s + 0.3 * t * t + 0.1 * s * s, t * (1 + 0.2 * s));
  for (const Sample& p : regular_samples(20, -0.3, 0.3)) {
    const Jet3 j = r.jet(p.s, p.t, 2);
    for (int c = 0; c < 3; ++c) {
      auto g = [&](double a, double b) { return r.point(a, b)[c]; };
      CHECK(testing_support::close_mixed(j[c].partial(1, 1), testing_support::fd4(g, p.s, p.t, 1, 1, 5e-3), 1e-5,
                                         1e-5));
    }
  }
}

TEST_CASE("curvature is refused inside the light-like band") {
  const GalleryEntry e = make_example("order3_circle");
  CHECK_THROWS_AS(curvature_bundle(*e.edge, 0.1, 0.0), LightlikePoint);
}

TEST_CASE("degenerate specs are rejected with a location") {
  EdgeSpec sp;
  sp.family = EdgeFamily::ClosedForm;
  const Expr s = Expr::s(), t = Expr::t();
  sp.closed_form = {s + t * t, Expr(0.0), t * t * t};
  CHECK_THROWS_AS(build_edge(sp), DegenerateSpec);

  EdgeSpec bad;
  bad.family = EdgeFamily::Sl;
  bad.k1 = Expr(0.3);
  bad.mu = MuSpec::constant({1.0});
  bad.theta = Expr(0.2);
  try {
    build_edge(bad);
    FAIL("expected DegenerateSpec");
  } catch (const DegenerateSpec& d) {
    CHECK(d.location() == doctest::Approx(bad.s0));
  }
  CHECK_THROWS_AS(edge_family_from_string("Q"), std::invalid_argument);
}
