#include <benchmark/benchmark.h>

#include "cuspidal/gallery.hpp"
#include "cuspidal/grid.hpp"

using namespace cuspidal;

namespace {

const Edge& circle() {
  static const GalleryEntry e = make_example("order3_circle");
  return *e.edge;
}

GridSpec grid(int n) {
  GridSpec g;
  g.s_min = 0.0;
  g.s_max = 6.0;
  g.t_min = -0.5;
  g.t_max = 0.5;
  g.ns = n;
  g.nt = n;
  return g;
}

void BM_EvaluateGridSerial(benchmark::State& st) {
  const GridSpec g = grid(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_grid_serial(circle(), g));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(g.size()));
}

void BM_EvaluateGrid(benchmark::State& st) {
  const GridSpec g = grid(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_grid(circle(), g));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(g.size()));
}

void BM_MeshSerial(benchmark::State& st) {
  const GridSpec g = grid(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mesh_vertices_serial(circle(), g));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(g.size()));
}

void BM_Mesh(benchmark::State& st) {
  const GridSpec g = grid(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mesh_vertices(circle(), g));
  st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(g.size()));
}

}  // namespace

BENCHMARK(BM_EvaluateGridSerial)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EvaluateGrid)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MeshSerial)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Mesh)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
