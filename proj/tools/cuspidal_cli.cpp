#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <string>

#include "cuspidal/classify.hpp"
#include "cuspidal/gallery.hpp"
#include "cuspidal/grid.hpp"
#include "cuspidal/io.hpp"

namespace fs = std::filesystem;
using namespace cuspidal;

namespace {

struct Loaded {
  RunConfig config;
  std::shared_ptr<const Edge> edge;
  std::optional<GalleryEntry> entry;
};

Loaded load(const std::string& path, std::optional<double> tol_scale, std::optional<int> jet_order) {
  Loaded l;
  l.config = load_run_config(path);
  if (tol_scale) {
    if (!(*tol_scale > 0)) throw std::invalid_argument("--tol-scale must be positive");
    l.config.tolerances.tol_scale = *tol_scale;
  }
  if (jet_order) {
    if (*jet_order < 2) throw std::invalid_argument("--jet-order must be at least 2");
    l.config.tolerances.jet_order = *jet_order;
  }
  if (l.config.gallery) {
    l.entry = make_example(l.config.gallery->name, l.config.gallery->params);
    l.edge = l.entry->edge;
  } else {
    l.edge = std::make_shared<Edge>(build_edge(*l.config.edge));
  }
  return l;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  return out;
}

void write_mesh(const Loaded& l, const fs::path& path) {
  const GridSpec g = l.config.grid();
  const std::vector<Vec3> v = mesh_vertices(*l.edge, g);
  auto out = open_out(path);
  out << "# " << g.ns << " x " << g.nt << " grid, s in [" << num(g.s_min) << ", " << num(g.s_max) << "], t in ["
      << num(g.t_min) << ", " << num(g.t_max) << "]\n";
  for (const Vec3& p : v) out << "v " << num(p.x) << ' ' << num(p.y) << ' ' << num(p.z) << '\n';
  for (int i = 0; i + 1 < g.ns; ++i)
    for (int j = 0; j + 1 < g.nt; ++j) {
      const std::size_t a = g.index(i, j) + 1, b = g.index(i + 1, j) + 1;
      out << "f " << a << ' ' << b << ' ' << b + 1 << ' ' << a + 1 << '\n';
    }
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void write_curvature_csv(const Loaded& l, const fs::path& path) {
  const GridSpec g = l.config.grid();
  const std::vector<GridSample> samples = evaluate_grid(*l.edge, g, l.config.tolerances.tol_scale);
  const bool lorentz = l.edge->metric().is_lorentzian();
  auto out = open_out(path);
  out << "s,t,E,F,G,Delta,K,H_abs,Re_lambda1,Im_lambda1,Re_lambda2,Im_lambda2,causal\r\n";
  for (const GridSample& x : samples) {
    if (x.t == 0.0) continue;
    out << num(x.s) << ',' << num(x.t) << ',' << num(x.forms.E) << ',' << num(x.forms.F) << ',' << num(x.forms.G)
        << ',' << num(x.forms.Delta) << ',';
    if (x.has_curvature) {
      const CurvatureBundle& b = x.bundle;
      out << num(b.K) << ',' << num(b.H_abs) << ',' << num(b.lambda1.real()) << ',' << num(b.lambda1.imag()) << ','
          << num(b.lambda2.real()) << ',' << num(b.lambda2.imag()) << ',';
    } else {
      out << ",,,,,,";
    }
    if (lorentz) {
      const CausalClass c = x.lightlike ? CausalClass::Lightlike
                                        : (x.forms.Delta > 0 ? CausalClass::Spacelike : CausalClass::Timelike);
      out << to_string(c);
    }
    out << "\r\n";
  }
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Json classify_report(const Loaded& l) {
  const RunConfig& c = l.config;
  Json points = Json::array();
  const int n = c.classify.samples;
  for (int i = 0; i < n; ++i) {
    const double s = n == 1 ? 0.5 * (c.s_min + c.s_max) : c.s_min + (c.s_max - c.s_min) * i / (n - 1);
    try {
      SingularPointReport r = edge_invariants(*l.edge, s);
      r.order = order_at(*l.edge, s, c.tolerances.jet_order, c.tolerances.order_tol);
      points.push_back(to_json(r));
    } catch (const std::exception& e) {
      points.push_back(Json{{"s", s}, {"error", e.what()}});
    }
  }
  Json j{{"source", c.gallery ? c.gallery->name : to_string(l.edge->family())}, {"singular_points", points}};
  if (c.classify.umbilic_scan) {
    UmbilicScanOptions opt;
    opt.tol_scale = c.tolerances.tol_scale;
    const auto found = umbilic_scan(*l.edge, c.grid(), opt);
    Json list = Json::array();
    double min_abs_t = INFINITY;
    for (const auto& u : found) {
      list.push_back(to_json(u));
      min_abs_t = std::min(min_abs_t, std::abs(u.t));
    }
    j["umbilics"] = Json{{"count", found.size()},
                         {"min_abs_t", found.empty() ? Json(nullptr) : Json(min_abs_t)},
                         {"points", list}};
  }
  return j;
}

int verify(const Loaded& l, bool self_test, const fs::path& path) {
  VerifyOptions opt;
  opt.tol = l.config.tolerances.verify_tol;
  opt.corrupt = self_test;
  const VerificationReport r = l.entry ? verify_gallery(*l.entry, opt) : verify_family(*l.edge, std::nullopt, opt);
  auto out = open_out(path);
  out << to_json(r).dump(2) << '\n';
  for (const auto& c : r.checks)
    if (c.status != Status::Pass)
      std::cout << (c.status == Status::Fail ? "FAIL " : "INCONCLUSIVE ") << c.name << " fitted=" << num(c.fitted)
                << " predicted=" << num(c.predicted) << '\n';
  std::cout << r.family << ": " << r.checks.size() << " checks, " << to_string(r.overall()) << '\n';
  switch (r.overall()) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    case Status::Inconclusive: return 2;
  }
  return 2;
}

int run(const std::string& primary, const std::string& config, const std::string& out_dir,
        std::optional<double> tol_scale, std::optional<int> jet_order, bool self_test) {
  const Loaded l = load(config, tol_scale, jet_order);
  std::set<std::string> wanted(l.config.outputs.begin(), l.config.outputs.end());
  wanted.insert(primary);
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  int code = 0;
  if (wanted.count("mesh")) write_mesh(l, dir / "mesh.obj");
  if (wanted.count("curvature_csv")) write_curvature_csv(l, dir / "curvature.csv");
  if (wanted.count("report_json")) {
    auto out = open_out(dir / "classify.json");
    out << classify_report(l).dump(2) << '\n';
  }
  if (wanted.count("verify")) code = verify(l, self_test, dir / "verify.json");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized cuspidal edges in Euclidean and Lorentz-Minkowski 3-space"};
  app.require_subcommand(1);

  std::string config, out_dir = ".";
  std::optional<double> tol_scale;
  std::optional<int> jet_order;
  bool self_test = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "JSON run config")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--tol-scale", tol_scale, "scale factor for the light-like and causal cutoffs");
    sub->add_option("--jet-order", jet_order, "highest t-derivative of Delta used by the order detector");
  };
  auto* mesh = app.add_subcommand("mesh", "write mesh.obj (and any other configured outputs)");
  auto* classify = app.add_subcommand("classify", "write classify.json with singular point reports");
  auto* verify_cmd = app.add_subcommand("verify", "check the asymptotic predictions; exit 0/1/2 = pass/fail/inconclusive");
  auto* list = app.add_subcommand("list-gallery", "print the gallery entries and their default parameters");
  add_common(mesh);
  add_common(classify);
  add_common(verify_cmd);
  verify_cmd->add_flag("--self-test", self_test, "corrupt the first prediction; the run must fail naming it");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& g : list_gallery()) {
        std::cout << g.name;
        for (const auto& [k, v] : g.defaults) std::cout << ' ' << k << '=' << v;
        std::cout << "\n    " << g.description << '\n';
      }
      return 0;
    }
    if (mesh->parsed()) return run("mesh", config, out_dir, tol_scale, jet_order, false);
    if (classify->parsed()) return run("report_json", config, out_dir, tol_scale, jet_order, false);
    return run("verify", config, out_dir, tol_scale, jet_order, self_test);
  } catch (const DegenerateSpec& e) {
    std::cerr << "error: " << e.what() << " (at s = " << num(e.location()) << ")\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 3;
}
