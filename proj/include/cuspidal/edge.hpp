#pragma once

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "cuspidal/expr.hpp"
#include "cuspidal/frame.hpp"
#include "cuspidal/jet.hpp"

namespace cuspidal {

/// A parametrized surface that can hand out Taylor jets of f at any (s, t).
class Surface {
 public:
  virtual ~Surface() = default;
  virtual Jet3 jet(double s, double t, int order) const = 0;
  virtual Metric metric() const = 0;
  Vec3 point(double s, double t) const { return value(jet(s, t, 0)); }
};

enum class EdgeFamily { E, T, Ss, St, Sl, LightGeneral, OrderFour, ClosedForm };

std::string to_string(EdgeFamily f);
EdgeFamily edge_family_from_string(const std::string& name);
/// (eps0, eps1, eps2) fixed by the family tag.
std::array<int, 3> family_epsilons(EdgeFamily f);
Metric family_metric(EdgeFamily f);
/// Hyperbolic (cosh, sinh) cusp functions for S_s and S_t, trig otherwise.
bool family_is_hyperbolic(EdgeFamily f);
bool family_is_lightlike(EdgeFamily f);

struct EdgeSpec {
  EdgeFamily family = EdgeFamily::E;
  /// Frame connection data (k1, k2, Omega); epsilons and metric come from the family.
  Expr k1, k2, Omega;
  /// Light-like families: curvature of the plane curve is k1, and Gamma = (gamma, phi).
  Expr phi = Expr::s();
  /// Builtin closed-form frame, overriding k1/k2/Omega when set.
  std::optional<std::string> builtin_frame;
  std::map<std::string, double> builtin_params;
  /// Initial frame at s0; default_initial_frame when absent.
  std::optional<Frame> initial_frame;
  Vec3 origin;
  MuSpec mu;
  Expr theta = Expr(0.0);
  int sigma = 1;
  /// Raw (X, Y) replacing the cusp formula in f = Gamma + X a1 + Y a2. mu is
  /// then only the nominal cusp data used by the invariants.
  std::optional<std::array<Expr, 2>> xy;
  /// ClosedForm family: components of f(s, t).
  std::array<Expr, 3> closed_form;
  /// Closed-form surfaces whose singular set is not {t = 0}; skips the axis checks.
  bool generic_surface = false;
  /// Metric used by the ClosedForm family.
  MetricKind closed_form_metric = MetricKind::Lorentzian;
  double s0 = 0.0;
  double s_min = -1.0, s_max = 1.0;
};

/// Raised by build_edge with the offending parameter.
class DegenerateSpec : public std::invalid_argument {
 public:
  DegenerateSpec(const std::string& what, double s) : std::invalid_argument(what), s_(s) {}
  double location() const { return s_; }

 private:
  double s_;
};

class Edge : public Surface {
 public:
  const EdgeSpec& spec() const { return spec_; }
  EdgeFamily family() const { return spec_.family; }
  Metric metric() const override { return metric_; }
  /// Frame field; null for the ClosedForm family.
  const FrameField* frame() const { return frame_.get(); }

  Jet3 jet(double s, double t, int order) const override;
  /// Taylor coefficients (s-only) of A and B at (s, t).
  std::array<Jet2, 2> cusp_jets(double s, double t, int order) const;
  bool has_mu() const { return spec_.family != EdgeFamily::ClosedForm; }

 private:
  friend Edge build_edge(const EdgeSpec& spec);
  EdgeSpec spec_;
  Metric metric_;
  std::shared_ptr<const FrameField> frame_;
  Expr lambda_;
};

/// Validates the EdgeSpec and prepares the evaluator. Throws DegenerateSpec when
/// f_tt(s,0) and Gamma'(s) are parallel on the sample grid.
Edge build_edge(const EdgeSpec& spec);

/// f(u(s,t), v(s,t)) for a closed-form change of coordinates.
class ReparamSurface : public Surface {
 public:
  ReparamSurface(std::shared_ptr<const Surface> base, Expr u, Expr v)
      : base_(std::move(base)), u_(std::move(u)), v_(std::move(v)) {}
  Jet3 jet(double s, double t, int order) const override;
  Metric metric() const override { return base_->metric(); }

 private:
  std::shared_ptr<const Surface> base_;
  Expr u_, v_;
};

struct FundForms {
  double E = 0, F = 0, G = 0;
  double Ltil = 0, Mtil = 0, Ntil = 0;
  double Delta = 0;
  Vec3 nu_tilde;
  Vec3 f_s, f_t;
};

using Mat2 = std::array<std::array<double, 2>, 2>;

struct CurvatureBundle {
  FundForms forms;
  double K = 0;
  /// Sign follows trace W~ / (2 Delta sqrt|Delta|); see H_abs.
  double H = 0;
  double H_abs = 0;
  std::complex<double> lambda1, lambda2;
  Mat2 W_tilde{};
  Mat2 W{};
  bool is_quasi_diagonal = false;
};

class LightlikePoint : public std::domain_error {
 public:
  LightlikePoint(double s, double t)
      : std::domain_error("curvature undefined at a light-like point"), s_(s), t_(t) {}
  double s() const { return s_; }
  double t() const { return t_; }

 private:
  double s_, t_;
};

FundForms fund_forms(const Surface& surface, double s, double t);
FundForms fund_forms_from_jet(const Jet3& f, const Metric& metric);
/// |Delta| <= 1e-12 (|f_s|_E |f_t|_E)^2.
bool is_lightlike_delta(const FundForms& ff, double tol_scale = 1.0);
/// Throws LightlikePoint inside the light-like band.
CurvatureBundle curvature_bundle(const Surface& surface, double s, double t, double tol_scale = 1.0);
CurvatureBundle curvature_bundle_from_forms(const FundForms& ff, const Metric& metric);

/// Eigenvalues of a real 2x2 matrix, larger modulus first.
std::array<std::complex<double>, 2> eigenvalues(const Mat2& m);
/// Same, with the determinant supplied (avoids cancellation in tiny eigenvalues).
std::array<std::complex<double>, 2> eigenvalues(const Mat2& m, double det);

/// t-jet of a scalar at (s, 0) of the first fundamental form determinant.
std::vector<double> delta_t_jet(const Surface& surface, double s, int order);

/// Jets at (s, t) of Delta, W~ entries and the discriminant trace^2 - 4 det.
struct FormJets {
  Jet2 E, F, G, L, M, N, Delta;
  std::array<std::array<Jet2, 2>, 2> W;
  Jet2 trace, det, discriminant;
};
FormJets form_jets(const Surface& surface, double s, double t, int order);

}  // namespace cuspidal
