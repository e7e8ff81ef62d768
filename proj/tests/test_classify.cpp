#include <doctest.h>

#include "cuspidal/classify.hpp"
#include "cuspidal/gallery.hpp"
#include "support.hpp"

using namespace cuspidal;

namespace {

std::vector<std::string> axis_edges() {
  std::vector<std::string> out;
  for (const auto& info : list_gallery()) {
    const GalleryEntry e = make_example(info.name);
    if (!e.edge->spec().generic_surface && info.name != "sphere" && info.name != "plane" &&
        info.name != "hyperbolic_plane")
      out.push_back(info.name);
  }
  return out;
}

}  // namespace

TEST_CASE("orders of the gallery singular points") {
  CHECK(order_at(*make_example("type_T").edge, 0.0).value == 2);
  CHECK(order_at(*make_example("light_general").edge, 0.0).value == 2);
  CHECK(order_at(*make_example("type_Sl").edge, 0.0).value == 3);
  CHECK(order_at(*make_example("order4_helix").edge, 0.0).value == 4);
  CHECK(order_at(*make_example("order5_helix").edge, 0.3).value == 5);
  const Order inf = order_at(*make_example("null_spiral").edge, 1.0);
  CHECK(inf.infinite);
  CHECK(inf.to_string() == "Infinite");
  const Order euc = order_at(*make_example("type_E").edge, 0.0);
  CHECK(euc.value == 2);
  CHECK_FALSE(euc.note.empty());
}

TEST_CASE("order is invariant under reparametrization") {
  const Expr s = Expr::s(), t = Expr::t();
  const Expr u = s + 0.3 * t * t + 0.1 * s * s, v = t * (1 + 0.2 * s + 0.1 * t);
  for (const char* name : {"type_T", "type_Ss", "light_general", "type_Sl", "order_four", "order4_helix",
                           "order5_helix", "order3_circle"}) {
    const GalleryEntry e = make_example(name);
    const ReparamSurface r(e.edge, u, v);
    for (double s0 : {-0.1, 0.0, 0.2}) {
      const Order a = order_at(static_cast<const Surface&>(*e.edge), u.eval(s0, 0.0));
      const Order b = order_at(r, s0);
      INFO(name, " s0=", s0);
      CHECK(a == b);
    }
  }
  const GalleryEntry ns = make_example("null_spiral");
  const ReparamSurface r(ns.edge, u + 1.0, v);
  const Order b = order_at(r, 0.1);
  CHECK((b.infinite || b.exceeds_max));
}

TEST_CASE("light-like base curve: order 2 or at least 4, tied to the causal type of the normal") {
  for (const char* name : {"light_general", "order_four", "order4_helix", "order5_helix", "null_spiral"}) {
    const GalleryEntry e = make_example(name);
    for (double s0 : {0.5, 0.8, 1.0}) {
      const Order o = order_at(*e.edge, s0);
      const CausalClass c = causal_type_at(*e.edge, s0, 0.0);
      INFO(name, " s0=", s0, " order ", o.to_string());
      CHECK((o.infinite || o.value != 3));
      CHECK((!o.infinite && o.value == 2) == (c == CausalClass::Timelike));
      CHECK((o.infinite || o.value >= 4) == (c == CausalClass::Lightlike));
    }
  }
}

TEST_CASE("type S_l: order three exactly at cuspidal edges") {
  const GalleryEntry e = make_example("type_Sl");
  CHECK(order_at(*e.edge, 0.0).value == 3);
  CHECK(singular_type(*e.edge, 0.0) == PointType::CuspidalEdge);

  EdgeSpec cc = e.edge->spec();
  cc.mu = MuSpec::from_coefficients({Expr::s(), Expr(-0.6)});
  const Edge x = build_edge(cc);
  CHECK(singular_type(x, 0.0) == PointType::CuspidalCrossCap);
  CHECK(order_at(x, 0.0).value > 3);
}

TEST_CASE("limiting normal curvature sign equals sigma_C") {
  int checked = 0;
  for (const auto& name : axis_edges()) {
    const GalleryEntry e = make_example(name);
    for (double s : {-0.3, 0.0, 0.25}) {
      const SingularPointReport r = edge_invariants(*e.edge, e.edge->spec().s0 + s);
      if (r.sigma_C == 0) continue;
      INFO(name, " s=", r.s);
      CHECK((r.kappa_nu_E > 0 ? 1 : -1) == r.sigma_C);
      CHECK(r.sigma_C == sigma_C(*e.edge, r.s));
      ++checked;
    }
  }
  CHECK(checked >= 15);
}

TEST_CASE("Lorentzian and Euclidean limiting normal curvatures vanish together") {
  for (const auto& name : axis_edges()) {
    const GalleryEntry e = make_example(name);
    if (!e.edge->metric().is_lorentzian()) continue;
    for (double s : {-0.3, 0.0, 0.25}) {
      const SingularPointReport r = edge_invariants(*e.edge, e.edge->spec().s0 + s);
      if (!r.kappa_nu_L) continue;
      const double band = 1e-9;
      INFO(name, " s=", r.s);
      CHECK((std::abs(*r.kappa_nu_L) <= band) == (std::abs(r.kappa_nu_E) <= band));
    }
  }
  EdgeSpec flat = make_example("type_T").edge->spec();
  flat.k2 = Expr(0.0);
  flat.Omega = Expr(0.0);
  const SingularPointReport r = edge_invariants(build_edge(flat), 0.0);
  REQUIRE(r.kappa_nu_L);
  CHECK(std::abs(*r.kappa_nu_L) <= 1e-9);
  CHECK(std::abs(r.kappa_nu_E) <= 1e-9);
}

TEST_CASE("Euclidean cuspidal edges: kappa^2 = kappa_s^2 + kappa_nu^2") {
  const GalleryEntry e = make_example("type_E");
  const double k1 = 0.3, k2 = 0.7;
  for (double s : {-0.2, 0.0, 0.4}) {
    const SingularPointReport r = edge_invariants(*e.edge, s);
    CHECK(r.kappa_s_E * r.kappa_s_E + r.kappa_nu_E * r.kappa_nu_E == doctest::Approx(k1 * k1 + k2 * k2));
  }
}

TEST_CASE("umbilics do not accumulate at generic cuspidal edges") {
  for (const char* name : {"type_E", "type_T", "type_Ss", "type_St", "light_general"}) {
    const GalleryEntry e = make_example(name);
    for (double w : {0.1, 0.05, 0.02, 0.01}) {
      GridSpec box{-w, w, -w, w, 21, 21};
      UmbilicScanOptions opt;
      opt.t_min = 0.0;
      INFO(name, " half width ", w);
      CHECK(umbilic_scan(*e.edge, box, opt).empty());
    }
  }
}

TEST_CASE("umbilics accumulate along the v-axis of the cross cap example") {
  const GalleryEntry e = make_example("umbilic_cross_cap");
  GridSpec box{-0.04, 0.04, -0.2, 0.2, 9, 41};
  const auto found = umbilic_scan(*e.edge, box);
  int on_axis_pos = 0, on_axis_neg = 0;
  double closest = 1;
  for (const auto& u : found) {
    if (std::abs(u.s) > 1e-12) continue;
    (u.t > 0 ? on_axis_pos : on_axis_neg)++;
    closest = std::min(closest, std::abs(u.t));
  }
  CHECK(on_axis_pos >= 10);
  CHECK(on_axis_neg >= 10);
  CHECK(closest <= 0.02);
  // The base curve (u, u^2, u^4) has vanishing torsion at u = 0 with Gamma'''' != 0, the
  // cuspidal cross cap condition for a tangent developable.
  const Vec3 g1(1, 0, 0), g2(0, 2, 0), g3(0, 0, 0), g4(0, 0, 24);
  CHECK(det3(g1, g2, g3) == 0.0);
  CHECK(det3(g1, g2, g4) != 0.0);
  for (double u : {-0.5, 0.3}) CHECK(norm(e.edge->point(u, 0.0) - Vec3(u, u * u, std::pow(u, 4))) <= 1e-14);
  CHECK(std::abs(fund_forms(*e.edge, 0.0, 0.0).Delta) <= 1e-14);
}

TEST_CASE("convexity and causal type of the order-four helix branches") {
  struct Branch {
    double a, sigma;
    Convexity conv;
    CausalClass off_axis;
  };
  for (const Branch& b : {Branch{1, 1, Convexity::Convex, CausalClass::Timelike},
                          Branch{2, -1, Convexity::Concave, CausalClass::Timelike},
                          Branch{0.5, -1, Convexity::Concave, CausalClass::Spacelike}}) {
    const GalleryEntry e = make_example("order4_helix", {{"a", b.a}, {"sigma", b.sigma}});
    const SingularPointReport r = edge_invariants(*e.edge, 0.0);
    INFO("a=", b.a, " sigma=", b.sigma);
    CHECK(r.order.value == 4);
    CHECK(r.convexity == b.conv);
    CHECK(causal_type_at(*e.edge, 0.0, 0.05) == b.off_axis);
    CHECK(causal_type_at(*e.edge, 0.0, -0.05) == b.off_axis);
  }
}
