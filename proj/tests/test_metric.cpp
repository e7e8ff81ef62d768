#include <doctest.h>

#include "cuspidal/metric.hpp"
#include "support.hpp"

using namespace cuspidal;
using testing_support::uniform;

namespace {
Vec3 random_unit_scale() { return Vec3(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)); }
}  // namespace

TEST_CASE("inner products and the Euclidean cross product") {
  CHECK(inner(Metric::euclidean(), Vec3(1, 2, 3), Vec3(1, 2, 3)) == 14.0);
  CHECK(inner(Metric::lorentzian(), Vec3(1, 2, 3), Vec3(1, 2, 3)) == -4.0);
  CHECK(cross(Metric::euclidean(), Vec3(1, 0, 0), Vec3(0, 1, 0)) == Vec3(0, 0, 1));
  CHECK(cross(Metric::lorentzian(), Vec3(1, 0, 0), Vec3(0, 1, 0)) == Vec3(0, 0, -1));
}

TEST_CASE("cross product is orthogonal to both factors in either metric") {
  for (Metric m : {Metric::euclidean(), Metric::lorentzian()})
    for (int n = 0; n < 200; ++n) {
      const Vec3 a = random_unit_scale(), b = random_unit_scale();
      const Vec3 c = cross(m, a, b);
      CHECK(std::abs(inner(m, c, a)) <= 1e-12);
      CHECK(std::abs(inner(m, c, b)) <= 1e-12);
    }
}

TEST_CASE("Lorentzian cross product norm identity") {
  const Metric m = Metric::lorentzian();
  for (int n = 0; n < 200; ++n) {
    const Vec3 a = random_unit_scale(), b = random_unit_scale();
    const Vec3 c = cross(m, a, b);
    const double want = -(inner(m, a, a) * inner(m, b, b) - inner(m, a, b) * inner(m, a, b));
    CHECK(inner(m, c, c) == doctest::Approx(want).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("causal classes") {
  const Metric m = Metric::lorentzian();
  CHECK(causal_class(m, Vec3(1, 0, 0)) == CausalClass::Spacelike);
  CHECK(causal_class(m, Vec3(0, 0, 1)) == CausalClass::Timelike);
  CHECK(causal_class(m, Vec3(1, 0, 1)) == CausalClass::Lightlike);
  CHECK(causal_class(m, Vec3(1, 0, 1 + 1e-12)) == CausalClass::Lightlike);
  CHECK_THROWS_AS(causal_class(Metric::euclidean(), Vec3(1, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(Vec3(NAN, 0, 0), std::invalid_argument);
  CHECK(metric_kind_from_string(to_string(MetricKind::Lorentzian)) == MetricKind::Lorentzian);
}
