#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cuspidal/asympt.hpp"
#include "cuspidal/edge.hpp"

namespace cuspidal {

using Params = std::map<std::string, double>;

/// Closed-form value of a pointwise quantity: E, F, G, Delta, Ltil, Mtil, Ntil, K or H_abs.
struct FieldExpectation {
  FieldExpectation(std::string q, std::function<double(double, double)> f, double tol_ = 1e-8, std::string note_ = {})
      : quantity(std::move(q)), value(std::move(f)), tol(tol_), note(std::move(note_)) {}
  std::string quantity;
  std::function<double(double s, double t)> value;
  double tol = 1e-8;
  std::string note;
};

/// Scalar expectation. Quantity names understood by verify_gallery:
///   order                  i_p at s0 (-1 for Infinite)
///   delta_t<k>             t^k coefficient of Delta at s0
///   causal_plus/minus/axis causal type at t = +-0.05 / 0 (0 space-, 1 time-, 2 light-like)
///   convexity              0 convex, 1 concave, 2 flat
///   sigma_C                sign of d^C at s0
///   K_pole:<k>             lim |t|->0 t^k K (t > 0)
///   H_abs_pole:<k>         lim |t|^k |H| (both sides)
///   unbounded:<K|H_abs>:<k> 1 when the pole-k coefficient is at least 1e-3 in magnitude
///   umbilic_axis           1 when the points (0, t), t != 0, are umbilics accumulating at (0, 0)
struct ScalarExpectation {
  std::string quantity;
  double value = 0.0;
  double tol = 1e-8;
};

struct GalleryEntry {
  std::string name;
  std::string description;
  Params params;
  std::shared_ptr<const Edge> edge;
  std::vector<FieldExpectation> fields;
  std::vector<ScalarExpectation> scalars;
  /// Order-four cusp data when the edge is not in mu-form.
  std::optional<OrderFourData> order_four;
  /// Field samples use |t| in [0.01, t_max].
  double t_max = 0.5;
};

struct GalleryInfo {
  std::string name;
  std::string description;
  Params defaults;
};

std::vector<GalleryInfo> list_gallery();

/// Throws std::invalid_argument for an unknown name or parameter.
GalleryEntry make_example(const std::string& name, const Params& params = {});

/// Spec of a constant-data witness for a family: E, T, Ss, St (k1, k2, omega,
/// mu0, mu1, mu2), Sl (adds dtheta), LightGeneral (kappa, phi2, theta0, dtheta,
/// mu0, mu1), OrderFour (kappa, dkappa, mu0, dmu0, mu1, sigma).
EdgeSpec witness_spec(EdgeFamily family, const Params& params = {});

/// Field closed forms at n deterministic sample points, every scalar
/// expectation, and the family expansion table for mu-form edges.
VerificationReport verify_gallery(const GalleryEntry& entry, const VerifyOptions& opt = {}, int samples = 100);

}  // namespace cuspidal
