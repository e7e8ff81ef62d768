#include <doctest.h>

#include "cuspidal/gallery.hpp"
#include "cuspidal/io.hpp"

using namespace cuspidal;

TEST_CASE("expression JSON round trip") {
  const Expr e = Expr::parse("sin(s)^2 + 3*t/(1 + s) - exp(-t) + sqrt(2 + cosh(s*t))");
  const Json j = expr_to_json(e);
  const Expr back = expr_from_json(j);
  CHECK(expr_to_json(back) == j);
  CHECK(back.eval(0.3, -0.2) == e.eval(0.3, -0.2));
  CHECK(expr_from_json(Json{{"const", 2.5}}).eval(0) == 2.5);
  CHECK(expr_from_json(Json("s*t")).eval(2, 3) == 6.0);
  CHECK_THROWS(expr_from_json(Json{{"op", "sin"}, {"args", Json::array({1, 2})}}));
  CHECK_THROWS(expr_from_json(Json{{"var", "u"}}));
  CHECK_THROWS(expr_from_json(Json{{"op", "tan"}, {"args", Json::array({1})}}));
}

TEST_CASE("every gallery edge spec survives serialization") {
  for (const auto& info : list_gallery()) {
    const GalleryEntry e = make_example(info.name);
    const Json j = edge_spec_to_json(e.edge->spec());
    const EdgeSpec back = edge_spec_from_json(j);
    INFO(info.name);
    CHECK(edge_spec_to_json(back) == j);
    const Edge rebuilt = build_edge(back);
    for (double t : {-0.3, 0.2}) {
      const double s = e.edge->spec().s0 + 0.1;
      CHECK(norm(rebuilt.point(s, t) - e.edge->point(s, t)) <= 1e-12);
    }
  }
}

TEST_CASE("run config: parse, serialize, parse is the identity") {
  const Json edge_cfg = Json::parse(R"({
    "edge": {"family": "Sl", "k1": 0.3, "k2": 0.7, "Omega": 0.4, "mu": [1.1, -0.6],
             "theta": "0.7853981633974483 + 0.2*s", "s_range": [-1, 1]},
    "domain": {"t": [-0.3, 0.3]},
    "grid": {"ns": 21, "nt": 21},
    "outputs": ["mesh", "curvature_csv"],
    "tolerances": {"tol_scale": 2.0, "jet_order": 10}
  })");
  const Json gallery_cfg = Json::parse(R"({"gallery": {"name": "order5_helix", "params": {"beta": 2}}})");
  for (const Json& j : {edge_cfg, gallery_cfg}) {
    const Json once = run_config_to_json(run_config_from_json(j));
    const Json twice = run_config_to_json(run_config_from_json(once));
    CHECK(once == twice);
  }
  const RunConfig c = run_config_from_json(edge_cfg);
  CHECK(c.s_min == -1.0);
  CHECK(c.t_max == 0.3);
  CHECK(c.tolerances.tol_scale == 2.0);
}

TEST_CASE("malformed configs are rejected") {
  auto bad = [](const char* text) { return run_config_from_json(Json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"grid": {"ns": 4, "nt": 4}})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"gallery": {"name": "fold"}, "grid": {"ns": 1, "nt": 4}})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"gallery": {"name": "fold"}, "outputs": ["png"]})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"gallery": {"name": "fold"}, "colour": 1})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"gallery": {"name": "fold"}, "domain": {"t": [0.5, -0.5]}})"), std::invalid_argument);
  CHECK_THROWS_AS(bad(R"({"gallery": {"name": "fold"}, "edge": {"family": "E", "mu": [1]}})"),
                  std::invalid_argument);
}

TEST_CASE("report serialization") {
  const GalleryEntry e = make_example("type_Sl");
  const Json r = to_json(edge_invariants(*e.edge, 0.0));
  CHECK(r["order"]["value"] == 3);
  CHECK(r["causal"] == "lightlike");
  const Json inf = to_json(order_at(*make_example("null_spiral").edge, 1.0));
  CHECK(inf["value"] == "Infinite");
  const Json v = to_json(verify_family(*make_example("type_Ss").edge));
  CHECK(v["overall"] == "pass");
  CHECK(v["checks"].size() == 8);
}
