#include <doctest.h>

#include "cuspidal/cusp2d.hpp"
#include "support.hpp"

using namespace cuspidal;
using testing_support::uniform;

namespace {

MuSpec random_mu() {
  std::vector<double> c{uniform(0.5, 3.0) * (uniform(0, 1) < 0.5 ? -1 : 1), uniform(-1, 1), uniform(-1, 1)};
  return MuSpec::constant(c);
}

}  // namespace

TEST_CASE("Euclidean cusp with constant mu: low Taylor coefficients") {
  const double mu0 = 1.7;
  const PlaneCusp c = build_cusp(CuspStyle::EuclideanTrig, MuSpec::constant({mu0}), 8);
  CHECK(c.alpha(1) == doctest::Approx(0.0).scale(1.0));
  CHECK(c.alpha(2) == doctest::Approx(1.0));
  CHECK(c.alpha(3) == doctest::Approx(0.0).scale(1.0));
  CHECK(c.alpha(4) == doctest::Approx(-3 * mu0 * mu0));
  CHECK(c.beta(2) == doctest::Approx(0.0).scale(1.0));
  CHECK(c.beta(3) == doctest::Approx(2 * mu0));
}

TEST_CASE("cuspidal curvature limit equals 2 mu0 for random specs in both styles") {
  for (int n = 0; n < 10; ++n) {
    const MuSpec mu = random_mu();
    const double mu0 = mu.coefficient_value(0, 0.0);
    for (auto [style, metric] : {std::pair{CuspStyle::EuclideanTrig, MetricKind::Euclidean},
                                 std::pair{CuspStyle::LorentzHyperbolic, MetricKind::Lorentzian}}) {
      const PlaneCusp c = build_cusp(style, mu, 10);
      const auto lim = cuspidal_curvature_limit(c, metric);
      INFO("mu0 = ", mu0, " style ", to_string(style));
      CHECK(std::abs(lim.value - 2 * mu0) <= 1e-5);
      CHECK(lim.warning.empty());
    }
  }
}

TEST_CASE("mu is reconstructed pointwise from curvature and arc length") {
  for (int n = 0; n < 10; ++n) {
    const MuSpec mu = random_mu();
    const Expr m = mu.mu();
    for (CuspStyle style : {CuspStyle::EuclideanTrig, CuspStyle::LorentzHyperbolic}) {
      const PlaneCusp c = build_cusp(style, mu, 10);
      for (double a : {1e-3, 0.01, 0.05, 0.1, 0.2, 0.3})
        for (double t : {a, -a}) {
          INFO(to_string(style), " t=", t);
          CHECK(std::abs(reconstruct_mu(c, t) - m.eval(0.0, t)) <= 1e-6);
        }
    }
  }
}

TEST_CASE("curvature agrees with finite differences of the curve") {
  const PlaneCusp c = build_cusp(CuspStyle::EuclideanTrig, MuSpec::constant({1.2, 0.4}), 10);
  for (double t : {0.05, 0.2, -0.25}) {
    auto x = [&](double u, double) { return c.point(u)[0]; };
    auto y = [&](double u, double) { return c.point(u)[1]; };
    const double x1 = testing_support::fd4(x, t, 0, 1, 0, 1e-3), y1 = testing_support::fd4(y, t, 0, 1, 0, 1e-3);
    const double x2 = testing_support::fd4(x, t, 0, 2, 0, 1e-3), y2 = testing_support::fd4(y, t, 0, 2, 0, 1e-3);
    const double want = (x1 * y2 - y1 * x2) / std::pow(x1 * x1 + y1 * y1, 1.5);
    CHECK(c.curvature(t) == doctest::Approx(want).epsilon(1e-6));
    CHECK(c.arc_length(t) == doctest::Approx(std::copysign(t * t / 2, t)).epsilon(1e-9));
  }
}

TEST_CASE("cusp classification and argument checks") {
  CHECK(classify_cusp(build_cusp(CuspStyle::EuclideanTrig, MuSpec::constant({0.0, 1.0}), 6)) ==
        CuspKind::GeneralizedCuspOnly);
  CHECK(classify_cusp(build_cusp(CuspStyle::EuclideanTrig, MuSpec::constant({2.0}), 6)) == CuspKind::Cusp);
  CHECK_THROWS_AS(build_cusp(CuspStyle::EuclideanTrig, MuSpec::constant({1.0}), 3), std::invalid_argument);
  const PlaneCusp c = build_cusp(CuspStyle::LorentzHyperbolic, MuSpec::constant({1.0}), 6);
  CHECK_THROWS_AS(cuspidal_curvature_limit(c, MetricKind::Euclidean), std::invalid_argument);
}
