#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cuspidal/expr.hpp"
#include "cuspidal/metric.hpp"

namespace cuspidal {

/// Columns (a0, a1, a2).
using Frame = std::array<Vec3, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// Connection data of F' = F K with <a_i, a_j> = eps_i delta_ij.
struct FrameData {
  std::array<int, 3> eps{1, 1, 1};
  Expr k1, k2, Omega;
  Metric metric;
  /// Height function of a light-like base curve: Gamma' = a0 + phi'(s) a2.
  /// Zero for all other families.
  Expr phi = Expr(0.0);
  bool has_lift = false;
};

/// K(s) with entries k_{ji} = -eps_i eps_j k_{ij}.
Mat3 connection_matrix(const FrameData& data, double s);

/// Identity columns with the timelike slot mapped to e3 and the last column
/// negated if needed so that det(a0, a1, a2) = +1.
Frame default_initial_frame(const FrameData& data);

/// Max |<a_i, a_j> - eps_i delta_ij|.
double orthonormality_defect(const FrameData& data, const Frame& f);

/// Normalized s-Taylor coefficients of the frame and base curve at s0.
struct FrameJet {
  double s0 = 0.0;
  std::array<std::vector<Vec3>, 3> a;
  std::vector<Vec3> gamma;
  int order() const { return static_cast<int>(gamma.size()) - 1; }
};

class FrameField {
 public:
  /// Integrates F' = F K from s0 over [s_min, s_max] with RK4 and metric
  /// Gram-Schmidt after every step. Gamma(s0) = origin.
  static FrameField integrate(const FrameData& data, const Frame& f0, double s0, const Vec3& origin, double s_min,
                              double s_max, double step = 1e-3);
  /// Closed-form frame; columns and curve given as Exprs in s.
  static FrameField closed_form(const FrameData& data, const std::array<std::array<Expr, 3>, 3>& columns,
                                const std::array<Expr, 3>& gamma);

  const FrameData& data() const { return data_; }
  bool is_closed_form() const { return closed_; }
  double s_min() const { return s_min_; }
  double s_max() const { return s_max_; }

  Frame frame_at(double s) const;
  Vec3 gamma_at(double s) const;
  const std::vector<double>& sample_s() const { return grid_; }
  const std::vector<Frame>& sample_frames() const { return frames_; }

  /// Derivatives from repeated application of K; no numerical differentiation.
  /// Throws std::invalid_argument for order > kMaxFrameJetOrder.
  FrameJet jet(double s0, int order) const;

  static constexpr int kMaxFrameJetOrder = 24;

 private:
  void state_at(double s, Frame& f, Vec3& g) const;

  FrameData data_;
  bool closed_ = false;
  std::array<std::array<Expr, 3>, 3> columns_;
  std::array<Expr, 3> gamma_expr_;
  double s_min_ = 0.0, s_max_ = 0.0, step_ = 1e-3;
  std::vector<double> grid_;
  std::vector<Frame> frames_;
  std::vector<Vec3> gammas_;
};

/// circle {radius}, helix {radius, pitch}, lightlike_lift {radius} (circle of
/// that radius lifted to (gamma, s)), frenet_of {radius, pitch} (the helix curve
/// through the generic Frenet construction). Throws on an unknown name.
FrameField builtin_frame(const std::string& name, const std::map<std::string, double>& params);

/// Frenet frame of a Euclidean curve in arc-length parametrization.
FrameField frenet_of(const std::array<Expr, 3>& curve);

/// Type-L style frame (e, n, v) over a plane curve gamma(s) in arc length,
/// with Gamma = (gamma, phi).
FrameField lightlike_lift(const std::array<Expr, 2>& plane_curve, const Expr& phi);

}  // namespace cuspidal
