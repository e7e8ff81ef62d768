#include <doctest.h>

#include "cuspidal/edge.hpp"
#include "cuspidal/frame.hpp"
#include "support.hpp"

using namespace cuspidal;

namespace {

FrameData data_for(EdgeFamily f, Expr k1, Expr k2, Expr omega) {
  FrameData d;
  d.eps = family_epsilons(f);
  d.metric = family_metric(f);
  d.k1 = std::move(k1);
  d.k2 = std::move(k2);
  d.Omega = std::move(omega);
  return d;
}

double max_diff(const Frame& a, const Frame& b) {
  double m = 0;
  for (int i = 0; i < 3; ++i) m = std::max(m, norm(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("unit curvature Euclidean frame closes after one turn") {
  const FrameData d = data_for(EdgeFamily::E, Expr(1.0), Expr(0.0), Expr(0.0));
  const Frame f0 = default_initial_frame(d);
  const FrameField ff = FrameField::integrate(d, f0, 0.0, Vec3(), 0.0, 2 * M_PI);
  CHECK(max_diff(ff.frame_at(2 * M_PI), f0) <= 1e-8);
  CHECK(norm(ff.gamma_at(2 * M_PI)) <= 1e-8);
  CHECK(norm(ff.gamma_at(M_PI) - Vec3(0, 2, 0)) <= 1e-8);
}

TEST_CASE("orthonormality drift stays below 1e-9 over a span of 20") {
  const Expr s = Expr::s();
  for (EdgeFamily fam : {EdgeFamily::E, EdgeFamily::T, EdgeFamily::Ss, EdgeFamily::St}) {
    const FrameData d = data_for(fam, 0.8 * sin(s), 0.5 * cos(2 * s), 0.3 * cos(s));
    const FrameField ff = FrameField::integrate(d, default_initial_frame(d), 0.0, Vec3(), -10.0, 10.0);
    double worst = 0;
    for (const Frame& f : ff.sample_frames()) worst = std::max(worst, orthonormality_defect(d, f));
    INFO(to_string(fam));
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("strongly boosted Lorentz frames: drift relative to the frame's Euclidean size") {
  // Components reach ~5e3 here, so the absolute defect is bounded by roundoff times |a|^2.
  const Expr s = Expr::s();
  for (EdgeFamily fam : {EdgeFamily::T, EdgeFamily::Ss, EdgeFamily::St}) {
    const FrameData d = data_for(fam, 0.8 + 0.3 * sin(s), 0.5 * cos(2 * s), 0.2 + 0.01 * s);
    const FrameField ff = FrameField::integrate(d, default_initial_frame(d), 0.0, Vec3(), -10.0, 10.0);
    double worst = 0, largest = 0;
    for (const Frame& f : ff.sample_frames()) {
      double m = 0;
      for (const Vec3& c : f) m = std::max(m, norm(c));
      largest = std::max(largest, m);
      worst = std::max(worst, orthonormality_defect(d, f) / (m * m));
    }
    INFO(to_string(fam), " largest column ", largest);
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("integrated helix frame matches the closed form") {
  const FrameField closed = builtin_frame("helix", {{"radius", 1.5}, {"pitch", 0.7}});
  const Frame f0 = closed.frame_at(0.0);
  const FrameField num = FrameField::integrate(closed.data(), f0, 0.0, closed.gamma_at(0.0), -5.0, 5.0);
  for (double s : {-5.0, -1.3, 0.4, 3.9, 5.0}) {
    CHECK(max_diff(num.frame_at(s), closed.frame_at(s)) <= 1e-8);
    CHECK(norm(num.gamma_at(s) - closed.gamma_at(s)) <= 1e-8);
  }
}

TEST_CASE("generic Frenet construction reproduces the helix frame") {
  const FrameField a = builtin_frame("helix", {{"radius", 1.0}, {"pitch", 0.5}});
  const FrameField b = builtin_frame("frenet_of", {{"radius", 1.0}, {"pitch", 0.5}});
  for (double s : {-0.8, 0.0, 1.1}) CHECK(max_diff(a.frame_at(s), b.frame_at(s)) <= 1e-10);
}

TEST_CASE("first-order frame jet coefficients equal F K") {
  const Expr s = Expr::s();
  const FrameData d = data_for(EdgeFamily::T, 0.6 + 0.2 * s, 0.3 * cos(s), 0.4 * sin(s));
  const FrameField ff = FrameField::integrate(d, default_initial_frame(d), 0.0, Vec3(), -2.0, 2.0);
  for (double s0 : {-1.7, -0.2, 0.9}) {
    const FrameJet j = ff.jet(s0, 3);
    const Frame f = ff.frame_at(s0);
    const Mat3 K = connection_matrix(d, s0);
    for (int i = 0; i < 3; ++i) {
      Vec3 want;
      for (int k = 0; k < 3; ++k) want += K[k][i] * f[k];
      CHECK(norm(j.a[i][1] - want) <= 1e-12);
    }
    CHECK(norm(j.gamma[1] - f[0]) <= 1e-12);
  }
  CHECK_THROWS_AS(ff.jet(0.0, FrameField::kMaxFrameJetOrder + 1), std::invalid_argument);
}

TEST_CASE("light-like lift has a null tangent everywhere") {
  const FrameField ff = builtin_frame("lightlike_lift", {{"radius", 2.0}});
  const Metric m = Metric::lorentzian();
  for (double s : {-3.0, -0.5, 0.0, 1.2, 4.0}) {
    const FrameJet j = ff.jet(s, 2);
    CHECK(std::abs(norm_sq(m, j.gamma[1])) <= 1e-14);
    CHECK(orthonormality_defect(ff.data(), ff.frame_at(s)) <= 1e-12);
  }
}

TEST_CASE("unknown builtin frames are rejected") {
  CHECK_THROWS_AS(builtin_frame("spiral", {}), std::invalid_argument);
  CHECK_THROWS_AS(builtin_frame("circle", {{"radius", -1.0}}), std::invalid_argument);
}
