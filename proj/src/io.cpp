#include "cuspidal/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <stdexcept>

namespace cuspidal {

namespace {

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const char* where) {
  if (!j.is_object()) throw std::invalid_argument(std::string(where) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw std::invalid_argument(std::string(where) + ": unknown key '" + key + "'");
  }
}

Json vec_to_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected a 3-vector");
  return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

Json params_to_json(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

Params params_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("params: expected an object");
  Params p;
  for (const auto& [k, v] : j.items()) p[k] = v.get<double>();
  return p;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace

Json expr_to_json(const Expr& e) {
  switch (e.op()) {
    case Expr::Op::Const: return e.const_value();
    case Expr::Op::VarS: return Json{{"var", "s"}};
    case Expr::Op::VarT: return Json{{"var", "t"}};
    default: {
      Json args = Json::array();
      for (const Expr& a : e.args()) args.push_back(expr_to_json(a));
      return Json{{"op", Expr::op_name(e.op())}, {"args", args}};
    }
  }
}

Expr expr_from_json(const Json& j) {
  if (j.is_number()) return Expr(j.get<double>());
  if (j.is_string()) return Expr::parse(j.get<std::string>());
  if (!j.is_object()) throw std::invalid_argument("expression: expected a number, string or object");
  if (j.contains("var")) {
    check_keys(j, {"var"}, "expression");
    const auto v = j["var"].get<std::string>();
    if (v == "s") return Expr::s();
    if (v == "t") return Expr::t();
    throw std::invalid_argument("expression: unknown variable '" + v + "'");
  }
  if (j.contains("const")) {
    check_keys(j, {"const"}, "expression");
    return Expr(j["const"].get<double>());
  }
  check_keys(j, {"op", "args"}, "expression");
  const Expr::Op op = Expr::op_from_name(j.at("op").get<std::string>());
  if (op == Expr::Op::Const || op == Expr::Op::VarS || op == Expr::Op::VarT)
    throw std::invalid_argument("expression: leaf op inside {op, args}");
  std::vector<Expr> args;
  for (const Json& a : j.at("args")) args.push_back(expr_from_json(a));
  const bool binary = op == Expr::Op::Add || op == Expr::Op::Sub || op == Expr::Op::Mul ||
                      op == Expr::Op::Div || op == Expr::Op::Pow;
  if (args.size() != (binary ? 2u : 1u))
    throw std::invalid_argument(std::string("expression: wrong arity for '") + Expr::op_name(op) + "'");
  return Expr::make(op, std::move(args));
}

Json mu_to_json(const MuSpec& mu) {
  Json j = Json::array();
  for (const Expr& c : mu.coefficients()) j.push_back(expr_to_json(c));
  return j;
}

MuSpec mu_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("mu: expected an array of coefficients");
  std::vector<Expr> c;
  for (const Json& e : j) c.push_back(expr_from_json(e));
  return MuSpec::from_coefficients(std::move(c));
}

Json edge_spec_to_json(const EdgeSpec& sp) {
  Json j;
  j["family"] = to_string(sp.family);
  j["s0"] = sp.s0;
  j["s_range"] = Json::array({sp.s_min, sp.s_max});
  if (sp.family == EdgeFamily::ClosedForm) {
    j["closed_form"] = Json::array();
    for (const Expr& e : sp.closed_form) j["closed_form"].push_back(expr_to_json(e));
    j["metric"] = to_string(sp.closed_form_metric);
    j["generic_surface"] = sp.generic_surface;
    return j;
  }
  if (sp.builtin_frame) {
    j["builtin_frame"] = Json{{"name", *sp.builtin_frame}, {"params", params_to_json(sp.builtin_params)}};
  } else {
    j["k1"] = expr_to_json(sp.k1);
    j["k2"] = expr_to_json(sp.k2);
    j["Omega"] = expr_to_json(sp.Omega);
  }
  if (family_is_lightlike(sp.family)) j["phi"] = expr_to_json(sp.phi);
  if (sp.initial_frame) {
    j["initial_frame"] = Json::array();
    for (const Vec3& c : *sp.initial_frame) j["initial_frame"].push_back(vec_to_json(c));
  }
  j["origin"] = vec_to_json(sp.origin);
  j["mu"] = mu_to_json(sp.mu);
  j["theta"] = expr_to_json(sp.theta);
  j["sigma"] = sp.sigma;
  if (sp.xy) j["xy"] = Json::array({expr_to_json((*sp.xy)[0]), expr_to_json((*sp.xy)[1])});
  return j;
}

EdgeSpec edge_spec_from_json(const Json& j) {
  check_keys(j,
             {"family", "s0", "s_range", "closed_form", "metric", "generic_surface", "builtin_frame", "k1", "k2",
              "Omega", "phi", "initial_frame", "origin", "mu", "theta", "sigma", "xy"},
             "edge");
  EdgeSpec sp;
  sp.family = edge_family_from_string(j.at("family").get<std::string>());
  sp.s0 = j.value("s0", 0.0);
  if (j.contains("s_range")) {
    sp.s_min = j["s_range"].at(0).get<double>();
    sp.s_max = j["s_range"].at(1).get<double>();
  }
  if (sp.family == EdgeFamily::ClosedForm) {
    const Json& cf = j.at("closed_form");
    if (!cf.is_array() || cf.size() != 3) throw std::invalid_argument("edge: closed_form needs three components");
    for (int i = 0; i < 3; ++i) sp.closed_form[i] = expr_from_json(cf[i]);
    sp.closed_form_metric = metric_kind_from_string(j.value("metric", std::string("Lorentzian")));
    sp.generic_surface = j.value("generic_surface", false);
    return sp;
  }
  if (j.contains("builtin_frame")) {
    const Json& b = j["builtin_frame"];
    check_keys(b, {"name", "params"}, "builtin_frame");
    sp.builtin_frame = b.at("name").get<std::string>();
    if (b.contains("params")) sp.builtin_params = params_from_json(b["params"]);
  }
  if (j.contains("k1")) sp.k1 = expr_from_json(j["k1"]);
  if (j.contains("k2")) sp.k2 = expr_from_json(j["k2"]);
  if (j.contains("Omega")) sp.Omega = expr_from_json(j["Omega"]);
  if (j.contains("phi")) sp.phi = expr_from_json(j["phi"]);
  if (j.contains("initial_frame")) {
    const Json& f = j["initial_frame"];
    if (!f.is_array() || f.size() != 3) throw std::invalid_argument("edge: initial_frame needs three columns");
    Frame fr;
    for (int i = 0; i < 3; ++i) fr[i] = vec_from_json(f[i]);
    sp.initial_frame = fr;
  }
  if (j.contains("origin")) sp.origin = vec_from_json(j["origin"]);
  sp.mu = mu_from_json(j.at("mu"));
  if (j.contains("theta")) sp.theta = expr_from_json(j["theta"]);
  sp.sigma = j.value("sigma", 1);
  if (j.contains("xy")) {
    const Json& xy = j["xy"];
    if (!xy.is_array() || xy.size() != 2) throw std::invalid_argument("edge: xy needs two components");
    sp.xy = std::array<Expr, 2>{expr_from_json(xy[0]), expr_from_json(xy[1])};
  }
  return sp;
}

GridSpec RunConfig::grid() const {
  GridSpec g;
  g.s_min = s_min;
  g.s_max = s_max;
  g.t_min = t_min;
  g.t_max = t_max;
  g.ns = ns;
  g.nt = nt;
  return g;
}

RunConfig run_config_from_json(const Json& j) {
  check_keys(j, {"edge", "gallery", "domain", "grid", "outputs", "tolerances", "classify"}, "config");
  RunConfig c;
  if (j.contains("edge") == j.contains("gallery"))
    throw std::invalid_argument("config: give exactly one of 'edge' and 'gallery'");
  if (j.contains("edge")) {
    c.edge = edge_spec_from_json(j["edge"]);
    c.s_min = c.edge->s_min;
    c.s_max = c.edge->s_max;
  } else {
    const Json& g = j["gallery"];
    check_keys(g, {"name", "params"}, "gallery");
    GalleryRef ref;
    ref.name = g.at("name").get<std::string>();
    if (g.contains("params")) ref.params = params_from_json(g["params"]);
    c.gallery = ref;
  }
  if (j.contains("domain")) {
    const Json& d = j["domain"];
    check_keys(d, {"s", "t"}, "domain");
    if (d.contains("s")) {
      c.s_min = d["s"].at(0).get<double>();
      c.s_max = d["s"].at(1).get<double>();
    }
    if (d.contains("t")) {
      c.t_min = d["t"].at(0).get<double>();
      c.t_max = d["t"].at(1).get<double>();
    }
  }
  if (!(c.s_min < c.s_max) || !(c.t_min < c.t_max)) throw std::invalid_argument("config: empty domain");
  if (j.contains("grid")) {
    const Json& g = j["grid"];
    check_keys(g, {"ns", "nt"}, "grid");
    c.ns = g.value("ns", c.ns);
    c.nt = g.value("nt", c.nt);
  }
  validate_grid(c.grid());
  if (j.contains("outputs")) {
    c.outputs.clear();
    for (const Json& o : j["outputs"]) {
      const auto name = o.get<std::string>();
      if (name != "mesh" && name != "curvature_csv" && name != "report_json" && name != "verify")
        throw std::invalid_argument("config: unknown output '" + name + "'");
      c.outputs.push_back(name);
    }
  }
  if (j.contains("tolerances")) {
    const Json& t = j["tolerances"];
    check_keys(t, {"tol_scale", "jet_order", "order_tol", "verify_tol"}, "tolerances");
    c.tolerances.tol_scale = t.value("tol_scale", c.tolerances.tol_scale);
    c.tolerances.jet_order = t.value("jet_order", c.tolerances.jet_order);
    c.tolerances.order_tol = t.value("order_tol", c.tolerances.order_tol);
    c.tolerances.verify_tol = t.value("verify_tol", c.tolerances.verify_tol);
    if (!(c.tolerances.tol_scale > 0)) throw std::invalid_argument("config: tol_scale must be positive");
    if (c.tolerances.jet_order < 2) throw std::invalid_argument("config: jet_order must be at least 2");
  }
  if (j.contains("classify")) {
    const Json& k = j["classify"];
    check_keys(k, {"samples", "umbilic_scan"}, "classify");
    c.classify.samples = k.value("samples", c.classify.samples);
    c.classify.umbilic_scan = k.value("umbilic_scan", c.classify.umbilic_scan);
    if (c.classify.samples < 1) throw std::invalid_argument("config: classify.samples must be positive");
  }
  return c;
}

Json run_config_to_json(const RunConfig& c) {
  Json j;
  if (c.edge) j["edge"] = edge_spec_to_json(*c.edge);
  if (c.gallery) j["gallery"] = Json{{"name", c.gallery->name}, {"params", params_to_json(c.gallery->params)}};
  j["domain"] = Json{{"s", Json::array({c.s_min, c.s_max})}, {"t", Json::array({c.t_min, c.t_max})}};
  j["grid"] = Json{{"ns", c.ns}, {"nt", c.nt}};
  j["outputs"] = c.outputs;
  j["tolerances"] = Json{{"tol_scale", c.tolerances.tol_scale},
                         {"jet_order", c.tolerances.jet_order},
                         {"order_tol", c.tolerances.order_tol},
                         {"verify_tol", c.tolerances.verify_tol}};
  j["classify"] = Json{{"samples", c.classify.samples}, {"umbilic_scan", c.classify.umbilic_scan}};
  return j;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("config '" + path + "': " + e.what());
  }
  return run_config_from_json(j);
}

Json to_json(const Order& o) {
  Json j{{"value", o.to_string()}, {"infinite", o.infinite}, {"exceeds_max", o.exceeds_max}};
  if (!o.infinite && !o.exceeds_max) j["value"] = o.value;
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

Json to_json(const SingularPointReport& r) {
  Json j;
  j["s"] = r.s;
  j["order"] = to_json(r.order);
  j["sigma_C"] = r.sigma_C;
  j["d_C"] = r.d_C;
  j["causal"] = r.causal ? Json(to_string(*r.causal)) : Json(nullptr);
  j["point_type"] = to_string(r.point_type);
  j["kappa_s_E"] = r.kappa_s_E;
  j["kappa_nu_E"] = r.kappa_nu_E;
  j["kappa_s_L"] = r.kappa_s_L ? Json(*r.kappa_s_L) : Json(nullptr);
  j["kappa_nu_L"] = r.kappa_nu_L ? Json(*r.kappa_nu_L) : Json(nullptr);
  j["D_E"] = vec_to_json(r.D_E);
  j["D_L"] = r.D_L ? vec_to_json(*r.D_L) : Json(nullptr);
  j["convexity"] = to_string(r.convexity);
  return j;
}

Json to_json(const UmbilicFinding& u) {
  return Json{{"s", u.s}, {"t", u.t}, {"kind", to_string(u.kind)}, {"gap", u.gap}};
}

Json to_json(const PredictionCheck& c) {
  Json j{{"name", c.name},           {"fitted", c.fitted}, {"predicted", c.predicted},
         {"residual", c.residual},   {"tol", c.tol},       {"status", status_name(c.status)}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"family", r.family}, {"s", r.s}, {"overall", status_name(r.overall())}, {"checks", checks}};
}

}  // namespace cuspidal
