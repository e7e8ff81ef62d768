#include <doctest.h>

#include "cuspidal/asympt.hpp"
#include "cuspidal/classify.hpp"
#include "cuspidal/gallery.hpp"
#include "support.hpp"

using namespace cuspidal;
using testing_support::uniform;

TEST_CASE("leading coefficient fits on synthetic series") {
  const FitResult a = fit_leading([](double t) { return 3 / t + 2 + t - 4 * t * t; }, 1);
  CHECK(a.value == doctest::Approx(3).epsilon(1e-10));
  const FitResult b = fit_leading([](double t) { return 3 / t + 2 + t; }, 1, {0.1, 6, -1, 1.0});
  CHECK(b.value == doctest::Approx(3).epsilon(1e-10));
  FitOptions half;
  half.power_step = 0.5;
  const FitResult c = fit_leading([](double t) { return 5 / std::sqrt(t) + 1 + std::sqrt(t); }, 0.5, half);
  CHECK(c.value == doctest::Approx(5).epsilon(1e-9));
  const FitResult d = fit_leading([](double t) { return 7 + 2 * t; }, 0);
  CHECK(d.value == doctest::Approx(7).epsilon(1e-12));
}

TEST_CASE("boundedness decisions") {
  CHECK(decide_boundedness(1e-9, 1.0, 0.1) == Boundedness::Bounded);
  CHECK(decide_boundedness(0.5, 1.0, 0.1) == Boundedness::Unbounded);
  CHECK(decide_boundedness(1e-3, 1.0, 0.1) == Boundedness::Inconclusive);
}

TEST_CASE("expansion tables pass for witnesses of types E, S_s, S_t, S_l and order four") {
  for (const char* name : {"type_E", "type_Ss", "type_St", "type_Sl", "order_four"}) {
    const GalleryEntry e = make_example(name);
    const VerificationReport r = verify_family(*e.edge);
    INFO(name);
    CHECK(r.checks.size() >= 6);
    for (const auto& c : r.checks) {
      INFO(c.name, " fitted ", c.fitted, " predicted ", c.predicted);
      CHECK(c.status == Status::Pass);
    }
  }
}

TEST_CASE("Euclidean expansions for random constant data") {
  for (int n = 0; n < 5; ++n) {
    const Params p{{"k1", uniform(-1, 1)}, {"k2", uniform(0.2, 1.2)}, {"omega", uniform(-0.5, 0.5)},
                   {"mu0", uniform(0.5, 2)}, {"mu1", uniform(-1, 1)},   {"mu2", uniform(-0.5, 0.5)}};
    const Edge e = build_edge(witness_spec(EdgeFamily::E, p));
    const VerificationReport r = verify_family(e);
    CHECK(r.overall() == Status::Pass);
    const auto* tH = r.find("t*H");
    REQUIRE(tH);
    CHECK(tH->fitted == doctest::Approx(p.at("mu0") / 2).epsilon(1e-3));
  }
}

TEST_CASE("the corrupted prediction is the one reported") {
  const GalleryEntry e = make_example("type_Ss");
  VerifyOptions opt;
  opt.corrupt = true;
  const VerificationReport r = verify_family(*e.edge, std::nullopt, opt);
  CHECK(r.overall() == Status::Fail);
  CHECK(r.checks.front().status == Status::Fail);
  for (std::size_t i = 1; i < r.checks.size(); ++i) CHECK(r.checks[i].status == Status::Pass);
}

TEST_CASE("documented discrepancies stay isolated") {
  // Type T: only the printed constant term of K disagrees. Light-like order two: only the
  // sign of the K pole; its magnitude and the real/non-real sides agree.
  for (auto [name, bad] : {std::pair{"type_T", "K - pole"}, std::pair{"light_general", "t*K"}}) {
    const VerificationReport r = verify_family(*make_example(name).edge);
    for (const auto& c : r.checks) {
      INFO(name, ": ", c.name);
      CHECK((c.status == Status::Pass) == (c.name != bad));
    }
  }
  const VerificationReport l = verify_family(*make_example("light_general").edge);
  CHECK(l.find("t*K")->fitted == doctest::Approx(-l.find("t*K")->predicted).epsilon(1e-6));
}

TEST_CASE("order-four boundedness dichotomy") {
  const Params base{{"kappa", 1}, {"dkappa", 0}, {"mu0", 2}, {"dmu0", 0}, {"sigma", 1}};
  Params holds = base;
  holds["mu1"] = 0;
  const TheoremGCheck a = check_theorem_G_bounded(build_edge(witness_spec(EdgeFamily::OrderFour, holds)), 0.0);
  CHECK(std::abs(a.residual) <= 1e-12);
  CHECK(a.H == Boundedness::Bounded);
  CHECK(a.consistent);

  Params varying = base;
  varying["dmu0"] = 0.3;
  varying["mu1"] = 8 * 2 * 0.3 / 3;
  const TheoremGCheck b = check_theorem_G_bounded(build_edge(witness_spec(EdgeFamily::OrderFour, varying)), 0.0);
  CHECK(std::abs(b.residual) <= 1e-12);
  CHECK(b.H == Boundedness::Bounded);

  Params violated = base;
  violated["mu1"] = 0.5;
  const TheoremGCheck c = check_theorem_G_bounded(build_edge(witness_spec(EdgeFamily::OrderFour, violated)), 0.0);
  CHECK(c.H == Boundedness::Unbounded);
  const double predicted = std::abs(-3 * 1 * 0.5 + 0 + 0) / (12 * std::pow(4 + 1.0, 1.5));
  CHECK(c.predicted_coefficient == doctest::Approx(predicted).epsilon(1e-12));
  CHECK(c.fitted_coefficient == doctest::Approx(predicted).epsilon(1e-3));

  CHECK_THROWS_AS(check_theorem_G_bounded(*make_example("type_T").edge, 0.0), std::invalid_argument);
}

TEST_CASE("order above four exactly for concave data with kappa = mu0^2") {
  struct Case {
    int sigma;
    double kappa;
    bool above_four;
  };
  for (const Case& c : {Case{-1, 4.0, true}, Case{-1, 4.1, false}, Case{1, 4.0, false}}) {
    const Params p{{"kappa", c.kappa}, {"dkappa", 0}, {"mu0", 2}, {"dmu0", 0}, {"mu1", 0}, {"sigma", c.sigma}};
    const Edge e = build_edge(witness_spec(EdgeFamily::OrderFour, p));
    const PropFCheck r = check_prop_F(e, 0.0);
    const Order o = order_at(e, 0.0);
    INFO("sigma ", c.sigma, " kappa ", c.kappa, " order ", o.to_string());
    CHECK(r.consistent);
    CHECK(r.order_gt_4 == c.above_four);
    CHECK((o.infinite || o.value > 4) == c.above_four);
    if (!c.above_four) CHECK(o.value == 4);
  }
}

TEST_CASE("discriminant root curve of a light-like order-two edge") {
  const GalleryEntry e = make_example("light_general");
  const auto dc = discriminant_curve(*e.edge, 0.0);
  REQUIRE(dc);
  CHECK(std::abs(dc->psi1) <= 1e-4);
  CHECK(std::abs(dc->psi2) > 1e-2);
  CHECK(dc->psi2 == doctest::Approx(dc->psi2_implicit).epsilon(1e-2));
  CHECK(dc->samples.size() >= 5);
  CHECK_FALSE(discriminant_curve(*make_example("type_T").edge, 0.0));
}
