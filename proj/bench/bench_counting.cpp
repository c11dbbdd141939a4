// Serial vs parallel vs brute-force reference on the counting kernels.

#include "homlab/catalog.hpp"
#include "homlab/corpus.hpp"
#include "homlab/graph.hpp"
#include "homlab/homsearch.hpp"
#include "homlab/parallel.hpp"
#include "homlab/reference.hpp"
#include "homlab/yoneda.hpp"

#include <benchmark/benchmark.h>

using namespace homlab;

namespace {

Graph petersen() {
  std::vector<std::pair<Index, Index>> edges;
  for (Index i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return build_graph(10, edges);
}

void graph_hom_serial(benchmark::State& state) {
  const Graph a = cycle_graph(static_cast<std::size_t>(state.range(0)));
  const Graph b = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(count_morphisms(a, b, MorphismClass::hom, Execution::serial));
}

void graph_hom_parallel(benchmark::State& state) {
  const Graph a = cycle_graph(static_cast<std::size_t>(state.range(0)));
  const Graph b = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(count_morphisms(a, b, MorphismClass::hom, Execution::parallel));
}

void graph_hom_reference(benchmark::State& state) {
  const Graph a = cycle_graph(static_cast<std::size_t>(state.range(0)));
  const Graph b = complete_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(reference::count(a, b, MorphismClass::hom));
}

void graph_hom_serial_small(benchmark::State& state) {
  const Graph a = cycle_graph(static_cast<std::size_t>(state.range(0)));
  const Graph b = complete_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(count_morphisms(a, b, MorphismClass::hom, Execution::serial));
}

void group_hom_serial(benchmark::State& state) {
  const FiniteGroup a = direct_power(cyclic_group(2), 3);
  const FiniteGroup b = symmetric_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_morphisms(a, b, MorphismClass::hom, Execution::serial));
}

void group_hom_parallel(benchmark::State& state) {
  const FiniteGroup a = direct_power(cyclic_group(2), 3);
  const FiniteGroup b = symmetric_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_morphisms(a, b, MorphismClass::hom, Execution::parallel));
}

void hom_matrix_corpus(benchmark::State& state) {
  set_jobs(static_cast<int>(state.range(0)));
  const auto gs = graph_corpus(4);
  const std::vector<Object> objs(gs.begin(), gs.end());
  for (auto _ : state) benchmark::DoNotOptimize(hom_matrix(objs, objs, MorphismClass::hom, Side::left));
  set_jobs(0);
}

}  // namespace

BENCHMARK(graph_hom_serial)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(graph_hom_parallel)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(graph_hom_reference)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(graph_hom_serial_small)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(group_hom_serial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(group_hom_parallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(hom_matrix_corpus)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
