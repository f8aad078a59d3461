#include <benchmark/benchmark.h>

#include "combdeform/deformation.hpp"
#include "combdeform/graph_complexes.hpp"
#include "combdeform/homology.hpp"
#include "combdeform/lattice_complexes.hpp"
#include "combdeform/pipeline.hpp"

using namespace combdeform;

static void BM_BarycentricSubdivision(benchmark::State& state) {
  const auto k = disconnected_graphs_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(barycentric_subdivision(k));
  state.counters["faces"] = static_cast<double>(k.size());
}
BENCHMARK(BM_BarycentricSubdivision)->Arg(4)->Arg(5);

static void BM_JlMatchingBoolean(benchmark::State& state) {
  const auto l = boolean_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jl_matching(l));
}
BENCHMARK(BM_JlMatchingBoolean)->Arg(3)->Arg(4);

static void BM_HomToNeighborhood(benchmark::State& state) {
  const auto g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hom_to_neighborhood_deformation(g));
}
BENCHMARK(BM_HomToNeighborhood)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_VerifyHomToNeighborhoodK4(benchmark::State& state) {
  const auto c = hom_to_neighborhood_deformation(complete_graph(4)).certificate;
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(c));
  state.counters["steps"] = static_cast<double>(c.steps().size());
}
BENCHMARK(BM_VerifyHomToNeighborhoodK4)->Unit(benchmark::kMillisecond);

static void BM_HomologyPartitionOrderComplex(benchmark::State& state) {
  const auto k = order_complex(proper_part(partition_lattice(static_cast<int>(state.range(0))).lattice));
  for (auto _ : state) benchmark::DoNotOptimize(homology(k));
  state.counters["faces"] = static_cast<double>(k.size());
}
BENCHMARK(BM_HomologyPartitionOrderComplex)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
