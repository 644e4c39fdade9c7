#include <benchmark/benchmark.h>

#include "floordiag/enumeration.hpp"
#include "floordiag/invariants.hpp"
#include "floordiag/markings.hpp"
#include "floordiag/node_polynomials.hpp"
#include "floordiag/sequences.hpp"
#include "floordiag/tropical.hpp"

namespace fd = floordiag;

static void BM_EnumerateConnected(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t n = 0;
    fd::enumerate(fd::DiagramQuery::connected(d, 1), [&](const fd::FloorDiagram&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_CountMarkings(benchmark::State& state) {
  const auto diagram = fd::FloorDiagram::parse("d=5; edges=(1,2,1);(2,3,1);(2,3,1);(3,4,1);(3,4,1);(4,5,2)");
  for (auto _ : state) benchmark::DoNotOptimize(fd::count_markings(diagram));
}
BENCHMARK(BM_CountMarkings);

static void BM_GromovWitten(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fd::gw(d, 1));
}
BENCHMARK(BM_GromovWitten)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_RelativeCubic(benchmark::State& state) {
  const auto lambda = fd::Partition::parse("1");
  const auto rho = fd::Partition::parse("2");
  for (auto _ : state) benchmark::DoNotOptimize(fd::relative_gw(3, 0, lambda, rho));
}
BENCHMARK(BM_RelativeCubic);

static void BM_NodePolynomial(benchmark::State& state) {
  const int delta = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fd::node_polynomial(delta).polynomial.degree());
}
BENCHMARK(BM_NodePolynomial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_MaxTangencyTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fd::max_tangency_table(16).back());
}
BENCHMARK(BM_MaxTangencyTable);

static void BM_CubicGallery(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fd::tropical_gallery(3, 0).size());
}
BENCHMARK(BM_CubicGallery)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
