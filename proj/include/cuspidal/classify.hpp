#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuspidal/edge.hpp"
#include "cuspidal/grid.hpp"

namespace cuspidal {

/// Order i_p of a singular point: least k with a nonzero t^k coefficient of Delta.
struct Order {
  int value = 0;
  bool infinite = false;
  /// No nonzero coefficient up to max_order but the flatness check failed.
  bool exceeds_max = false;
  std::string note;

  bool operator==(const Order& o) const {
    return value == o.value && infinite == o.infinite && exceeds_max == o.exceeds_max;
  }
  std::string to_string() const;
};

inline constexpr int kDefaultMaxOrder = 8;
inline constexpr double kOrderTol = 1e-9;

/// Coefficient r_k counts as zero when |r_k| <= tol max(1, max_j |r_j|).
/// Euclidean surfaces return 2 with a note.
Order order_at(const Surface& surface, double s, int max_order = kDefaultMaxOrder, double tol = kOrderTol);
/// Adds the closed-form flatness check before declaring Infinite.
Order order_at(const Edge& edge, double s, int max_order = kDefaultMaxOrder, double tol = kOrderTol);

/// d^C = det(Gamma', f_tt, Gamma'') at (s, 0).
double d_C(const Surface& surface, double s);
/// Sign of d^C with the zero band 1e-9 |Gamma'| |f_tt| |Gamma''|.
int sigma_C(const Surface& surface, double s);

enum class PointType { CuspidalEdge, CuspidalCrossCap, Undetermined };
std::string to_string(PointType p);

/// Needs the mu-function; ClosedForm edges give Undetermined unless
/// unsafe_estimate is set, which estimates mu_0 from finite differences.
PointType singular_type(const Edge& edge, double s, double tol = 1e-10, bool unsafe_estimate = false);

/// Cuspidal curvature / 2 of a Euclidean generalized cuspidal edge, estimated
/// with finite differences of f.
double estimate_mu0(const Surface& surface, double s, double step = 1e-3);

enum class Convexity { Convex, Concave, Flat };
std::string to_string(Convexity c);

struct SingularPointReport {
  double s = 0;
  Order order;
  int sigma_C = 0;
  double d_C = 0;
  std::optional<CausalClass> causal;
  PointType point_type = PointType::Undetermined;
  double kappa_s_E = 0, kappa_nu_E = 0;
  std::optional<double> kappa_s_L, kappa_nu_L;
  Vec3 D_E;
  std::optional<Vec3> D_L;
  Convexity convexity = Convexity::Flat;
};

SingularPointReport edge_invariants(const Surface& surface, double s);
SingularPointReport edge_invariants(const Edge& edge, double s);

/// Causal type of the point: space-like iff the normal is time-like. At t = 0
/// the limiting normal Gamma' x f_tt is used.
CausalClass causal_type_at(const Surface& surface, double s, double t);

enum class UmbilicKind { Umbilic, QuasiUmbilic };
std::string to_string(UmbilicKind k);

struct UmbilicFinding {
  double s = 0, t = 0;
  UmbilicKind kind = UmbilicKind::Umbilic;
  double gap = 0;
};

struct UmbilicScanOptions {
  /// Relative eigenvalue gap |l1 - l2| <= tol max(1, |l1| + |l2|).
  double tol = 1e-8;
  /// Rows with |t| < t_min are skipped.
  double t_min = 1e-3;
  int bisection_iterations = 40;
  double tol_scale = 1.0;
};

std::vector<UmbilicFinding> umbilic_scan(const Surface& surface, const GridSpec& region,
                                         const UmbilicScanOptions& opt = {});

}  // namespace cuspidal
