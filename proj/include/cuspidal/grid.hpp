#pragma once

#include <vector>

#include "cuspidal/edge.hpp"

namespace cuspidal {

struct GridSpec {
  double s_min = -1.0, s_max = 1.0;
  double t_min = -0.5, t_max = 0.5;
  int ns = 2, nt = 2;

  double s_at(int i) const { return ns == 1 ? s_min : s_min + (s_max - s_min) * i / (ns - 1); }
  double t_at(int j) const { return nt == 1 ? t_min : t_min + (t_max - t_min) * j / (nt - 1); }
  std::size_t size() const { return static_cast<std::size_t>(ns) * static_cast<std::size_t>(nt); }
  /// Row-major, s outer and t inner.
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * nt + j; }
};

struct GridSample {
  double s = 0, t = 0;
  FundForms forms;
  /// False on the singular row and inside the light-like band.
  bool has_curvature = false;
  bool lightlike = false;
  CurvatureBundle bundle;
};

/// Throws std::invalid_argument for grids smaller than 2x2.
void validate_grid(const GridSpec& g);

std::vector<GridSample> evaluate_grid_serial(const Surface& surface, const GridSpec& g, double tol_scale = 1.0);
/// OpenMP version; identical results to the serial kernel.
std::vector<GridSample> evaluate_grid(const Surface& surface, const GridSpec& g, double tol_scale = 1.0);

std::vector<Vec3> mesh_vertices_serial(const Surface& surface, const GridSpec& g);
std::vector<Vec3> mesh_vertices(const Surface& surface, const GridSpec& g);

}  // namespace cuspidal
