#pragma once

#include <memory>
#include <vector>

#include "cuspidal/edge.hpp"

namespace cuspidal {

/// Jet of the unit normal nu~/sqrt|<nu~,nu~>| at (s, t). Where nu~ vanishes
/// because f_t(s,t) = 0, nu~/(t - t0) is normalized instead. Throws
/// LightlikePoint inside the light-like band.
Jet3 unit_normal_jet(const Surface& surface, double s, double t, int order, double tol_scale = 1.0);

/// f^t = f - t nu, so that (f^t)_u = f_u (I + t W) with W the Weingarten matrix.
/// For an Edge base singular along t = 0, nu is the smooth front normal, which is
/// -nu~/|nu~| on t < 0. The values returned by parallel_singular_values refer to
/// nu~/|nu~| on both sides.
class ParallelFront : public Surface {
 public:
  ParallelFront(std::shared_ptr<const Surface> base, double offset, double tol_scale = 1.0)
      : base_(std::move(base)), offset_(offset), tol_scale_(tol_scale) {}
  Jet3 jet(double s, double t, int order) const override;
  Metric metric() const override { return base_->metric(); }
  double offset() const { return offset_; }
  const Surface& base() const { return *base_; }

 private:
  std::shared_ptr<const Surface> base_;
  double offset_;
  double tol_scale_;
};

ParallelFront parallel_surface(std::shared_ptr<const Surface> base, double offset);

struct ParallelRoot {
  double t = 0.0;
  int multiplicity = 1;
};

/// Offsets t* = -1/lambda_i for the real nonzero principal curvatures, so that
/// det(I + t* W) = 0. Equal roots are merged with multiplicity two. Empty for
/// a non-real pair. Throws LightlikePoint.
std::vector<ParallelRoot> parallel_singular_values(const Surface& base, double u, double v);

/// det(I + t W) at a regular point.
double parallel_jacobian_det(const Surface& base, double u, double v, double t);

/// Max Euclidean norm of the columns of (nu_u, nu_v) + (f_u, f_v) W. With
/// fd_step > 0 the derivatives of nu come from central differences instead of jets.
double lorentz_weingarten_residual(const Surface& base, double u, double v, double fd_step = 0.0);

}  // namespace cuspidal
