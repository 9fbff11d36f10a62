#include <benchmark/benchmark.h>

#include "bareo/census.hpp"
#include "bareo/invariants.hpp"

namespace {

void BM_Census(benchmark::State& state) {
    bareo::Graph g = bareo::named_graph(bareo::NamedKind::Path, 3);
    bareo::Graph h = bareo::named_graph(bareo::NamedKind::Complete, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(bareo::census(g, h));
}
BENCHMARK(BM_Census);

void BM_ChromaticPetersen(benchmark::State& state) {
    bareo::Graph g = bareo::named_graph(bareo::NamedKind::Petersen, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(bareo::chromatic_number(g));
}
BENCHMARK(BM_ChromaticPetersen);

void BM_PostmanPetersen(benchmark::State& state) {
    bareo::Graph g = bareo::named_graph(bareo::NamedKind::Petersen, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(bareo::min_covering_closed_walk(g));
}
BENCHMARK(BM_PostmanPetersen);

void BM_Theta(benchmark::State& state) {
    bareo::Graph g = bareo::named_graph(bareo::NamedKind::Cycle, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(bareo::theta(g));
}
BENCHMARK(BM_Theta)->Arg(4)->Arg(6);

} // namespace
