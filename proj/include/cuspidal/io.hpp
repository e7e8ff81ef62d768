#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuspidal/asympt.hpp"
#include "cuspidal/classify.hpp"
#include "cuspidal/edge.hpp"
#include "cuspidal/gallery.hpp"
#include "cuspidal/grid.hpp"

namespace cuspidal {

using Json = nlohmann::json;

/// A number, an infix string, {"var": "s"|"t"}, {"const": c} or {"op": name, "args": [...]}.
/// Serialization always writes numbers, {"var"} and {"op", "args"}.
Json expr_to_json(const Expr& e);
Expr expr_from_json(const Json& j);

/// Array of mu_k expressions.
Json mu_to_json(const MuSpec& mu);
MuSpec mu_from_json(const Json& j);

Json edge_spec_to_json(const EdgeSpec& spec);
/// Unknown keys are rejected.
EdgeSpec edge_spec_from_json(const Json& j);

struct GalleryRef {
  std::string name;
  Params params;
};

struct Tolerances {
  double tol_scale = 1.0;
  /// Highest t-derivative of Delta examined by the order detector.
  int jet_order = kDefaultMaxOrder;
  double order_tol = kOrderTol;
  double verify_tol = 1e-3;
};

struct ClassifyOptions {
  /// Singular points sampled uniformly over the s-range.
  int samples = 5;
  bool umbilic_scan = false;
};

/// Exactly one of edge and gallery is set.
struct RunConfig {
  std::optional<EdgeSpec> edge;
  std::optional<GalleryRef> gallery;
  double s_min = -1.0, s_max = 1.0;
  double t_min = -0.5, t_max = 0.5;
  int ns = 64, nt = 32;
  /// Subset of mesh, curvature_csv, report_json, verify.
  std::vector<std::string> outputs{"mesh"};
  Tolerances tolerances;
  ClassifyOptions classify;

  GridSpec grid() const;
};

/// Throws std::invalid_argument on a malformed config (missing edge, grid
/// below 2x2, empty range, unknown output or key).
RunConfig run_config_from_json(const Json& j);
Json run_config_to_json(const RunConfig& c);
RunConfig load_run_config(const std::string& path);

Json to_json(const Order& o);
Json to_json(const SingularPointReport& r);
Json to_json(const UmbilicFinding& u);
Json to_json(const PredictionCheck& c);
Json to_json(const VerificationReport& r);

}  // namespace cuspidal
