#include "cuspidal/grid.hpp"

#include <exception>
#include <stdexcept>

namespace cuspidal {

namespace {

GridSample sample_at(const Surface& surface, const GridSpec& g, int i, int j, double tol_scale) {
  GridSample r;
  r.s = g.s_at(i);
  r.t = g.t_at(j);
  r.forms = fund_forms(surface, r.s, r.t);
  r.lightlike = is_lightlike_delta(r.forms, tol_scale);
  if (!r.lightlike && r.t != 0.0) {
    r.bundle = curvature_bundle_from_forms(r.forms, surface.metric());
    r.has_curvature = true;
  }
  return r;
}

}  // namespace

void validate_grid(const GridSpec& g) {
  if (g.ns < 2 || g.nt < 2) throw std::invalid_argument("grid must be at least 2x2");
  if (!(g.s_min < g.s_max) || !(g.t_min < g.t_max)) throw std::invalid_argument("grid ranges must be nonempty");
}

std::vector<GridSample> evaluate_grid_serial(const Surface& surface, const GridSpec& g, double tol_scale) {
  validate_grid(g);
  std::vector<GridSample> out(g.size());
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) out[g.index(i, j)] = sample_at(surface, g, i, j, tol_scale);
  return out;
}

std::vector<GridSample> evaluate_grid(const Surface& surface, const GridSpec& g, double tol_scale) {
  validate_grid(g);
  std::vector<GridSample> out(g.size());
  const long n = static_cast<long>(g.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < n; ++k) {
    const int i = static_cast<int>(k / g.nt), j = static_cast<int>(k % g.nt);
    try {
      out[k] = sample_at(surface, g, i, j, tol_scale);
    } catch (...) {
#pragma omp critical(cuspidal_grid_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<Vec3> mesh_vertices_serial(const Surface& surface, const GridSpec& g) {
  validate_grid(g);
  std::vector<Vec3> out(g.size());
  for (int i = 0; i < g.ns; ++i)
    for (int j = 0; j < g.nt; ++j) out[g.index(i, j)] = surface.point(g.s_at(i), g.t_at(j));
  return out;
}

std::vector<Vec3> mesh_vertices(const Surface& surface, const GridSpec& g) {
  validate_grid(g);
  std::vector<Vec3> out(g.size());
  const long n = static_cast<long>(g.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < n; ++k) {
    const int i = static_cast<int>(k / g.nt), j = static_cast<int>(k % g.nt);
    try {
      out[k] = surface.point(g.s_at(i), g.t_at(j));
    } catch (...) {
#pragma omp critical(cuspidal_grid_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace cuspidal
