#include <benchmark/benchmark.h>

#include "bareo/census.hpp"
#include "bareo/topology.hpp"

namespace {

void BM_EnumerateOpenSets(benchmark::State& state) {
    bareo::Graph g = bareo::named_graph(bareo::NamedKind::Cycle, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bareo::enumerate_open_sets(g));
}
BENCHMARK(BM_EnumerateOpenSets)->Arg(4)->Arg(6)->Arg(8);

void BM_OpenMasks(benchmark::State& state) {
    bareo::Graph g = bareo::named_graph(bareo::NamedKind::Complete, static_cast<int>(state.range(0)));
    bareo::PointIndex idx(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(bareo::enumerate_open_masks(idx));
}
BENCHMARK(BM_OpenMasks)->Arg(3)->Arg(4)->Arg(5);

void BM_IsOpen(benchmark::State& state) {
    bareo::Graph g = bareo::named_graph(bareo::NamedKind::Petersen, 0);
    bareo::PointSet star = bareo::open_star(g, "v1");
    for (auto _ : state)
        benchmark::DoNotOptimize(bareo::is_open(g, star));
}
BENCHMARK(BM_IsOpen);

void BM_ConnectednessOracle(benchmark::State& state) {
    bareo::Graph g = bareo::named_graph(bareo::NamedKind::Cycle, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bareo::connectedness_oracle(g));
}
BENCHMARK(BM_ConnectednessOracle)->Arg(5)->Arg(7);

} // namespace
