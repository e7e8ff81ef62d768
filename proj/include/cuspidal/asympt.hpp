#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cuspidal/edge.hpp"

namespace cuspidal {

struct FitResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

struct FitOptions {
  double t0 = 0.1;
  int levels = 6;
  /// +1 samples t > 0, -1 samples t < 0.
  int side = 1;
  /// Spacing of the powers of t in the error expansion (0.5 for half-integer series).
  double power_step = 1.0;
};

/// Richardson limit of t^k g(t) over t = side t0 2^-j, j = 0..levels. Integral
/// k uses the signed t; other k use |t|^k.
FitResult fit_leading(const std::function<double(double)>& g, double pole_order, const FitOptions& opt = {});

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct PredictionCheck {
  std::string name;
  double fitted = 0.0;
  double predicted = 0.0;
  double residual = 0.0;
  double tol = 1e-3;
  Status status = Status::Pass;
  std::string note;
};

struct VerificationReport {
  std::string family;
  double s = 0.0;
  std::vector<PredictionCheck> checks;
  Status overall() const;
  const PredictionCheck* find(const std::string& name) const;
};

struct VerifyOptions {
  FitOptions fit;
  double tol = 1e-3;
  /// Negative control: shifts the first prediction by one.
  bool corrupt = false;
};

/// Fits every leading/constant term of the family's expansion table at s
/// (default: spec.s0) and checks the sign patterns.
VerificationReport verify_family(const Edge& edge, std::optional<double> s = std::nullopt,
                                 const VerifyOptions& opt = {});

enum class Boundedness { Bounded, Unbounded, Inconclusive };
std::string to_string(Boundedness b);

/// Bounded when |coefficient| <= 1e-4 typical, unbounded when >= 1e-1 t0 typical,
/// where typical = |g(t0)|. Inconclusive in between.
Boundedness decide_boundedness(double coefficient, double typical, double t0);

/// Local data of an order-four edge at a point.
struct OrderFourData {
  double kappa = 0, dkappa = 0, mu0 = 0, dmu0 = 0, mu1 = 0;
  int sigma = 1;
};
OrderFourData order_four_data(const Edge& edge, double s);

struct TheoremGCheck {
  double residual = 0.0;        // 3 kappa mu1 - 8 mu0 mu0' - 3 sigma kappa'
  double fitted_coefficient = 0.0;  // lim t |H|
  double predicted_coefficient = 0.0;
  Boundedness H = Boundedness::Inconclusive;
  bool consistent = false;
};

/// Throws std::invalid_argument unless the order at s is four.
TheoremGCheck check_theorem_G_bounded(const Edge& edge, double s, const FitOptions& fit = {});
TheoremGCheck check_theorem_G_bounded(const Edge& edge, double s, const OrderFourData& data,
                                      const FitOptions& fit = {});

struct PropFCheck {
  bool order_gt_4 = false;
  bool concave = false;
  bool kappa_eq_mu0sq = false;
  bool consistent = false;
  std::string order;
};

/// Throws std::invalid_argument when the order is below four.
PropFCheck check_prop_F(const Edge& edge, double s, double tol = 1e-9);

struct DiscriminantCurve {
  std::vector<std::pair<double, double>> samples;  // (s, psi(s))
  double psi1 = 0.0, psi2 = 0.0;                   // quartic least-squares fit at s0
  double psi1_implicit = 0.0, psi2_implicit = 0.0;  // implicit function theorem
  int t_power = 4;                                  // F = discriminant / t^t_power
};

struct DiscriminantWindow {
  double half_width = 0.05;
  double t_max = 0.05;
  int columns = 11;
};

/// Root curve t = psi(s) of F = (trace^2 - 4 det) W~ / t^m near (s0, 0), where m
/// is the generic vanishing order of the discriminant along the axis.
std::optional<DiscriminantCurve> discriminant_curve(const Surface& surface, double s0,
                                                    const DiscriminantWindow& window = {});

}  // namespace cuspidal
