#include <benchmark/benchmark.h>

#include <numeric>

#include "gdf/generators.hpp"
#include "gdf/orderings.hpp"
#include "gdf/problems.hpp"
#include "gdf/solvers.hpp"

namespace {

using namespace gdf;

EliminationOrder identity_order(std::size_t n) {
  EliminationOrder o{std::vector<Vertex>(n), OrderKind::StrongElimination};
  std::iota(o.order.begin(), o.order.end(), Vertex{0});
  return o;
}

void BM_GreedyPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = Graph::path(n);
  const auto cert = certify(g, identity_order(n));
  const auto inst = from_two_packing(g);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_packing(inst, cert));
  state.SetComplexityN(state.range(0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GreedyPath)->RangeMultiplier(10)->Range(1000, 1'000'000)->Complexity(benchmark::oN);

void BM_GreedyTree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_random_tree(n, 42);
  const auto cert = certify(g, *find_strong_elimination(g).order);
  const auto inst = GenInstance::uniform(g, 2, 1, Sense::Pack);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_packing(inst, cert));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GreedyTree)->RangeMultiplier(4)->Range(1024, 65536)->Complexity(benchmark::oN);

void BM_DominationViaDuality(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = Graph::path(n);
  const auto cert = certify(g, identity_order(n));
  const auto inst = from_domination(g);
  for (auto _ : state) benchmark::DoNotOptimize(solve_domination_strongly_chordal(inst, cert));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DominationViaDuality)->RangeMultiplier(10)->Range(1000, 1'000'000)->Complexity(benchmark::oN);

void BM_VerifyStrongPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = Graph::path(n);
  const auto order = identity_order(n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_strong_elimination(g, order));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VerifyStrongPath)->RangeMultiplier(10)->Range(1000, 100'000)->Complexity();

void BM_VerifyStrongInterval(benchmark::State& state) {
  const Graph g = gen_random_interval_graph(static_cast<std::size_t>(state.range(0)), 7);
  const auto order = *find_strong_elimination(g).order;
  for (auto _ : state) benchmark::DoNotOptimize(verify_strong_elimination(g, order));
}
BENCHMARK(BM_VerifyStrongInterval)->Arg(50)->Arg(100)->Arg(200);

void BM_FindStrongTree(benchmark::State& state) {
  const Graph g = gen_random_tree(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(find_strong_elimination(g));
}
BENCHMARK(BM_FindStrongTree)->Arg(100)->Arg(1000)->Arg(5000);

void BM_BruteForceTree(benchmark::State& state) {
  const Graph g = gen_random_tree(static_cast<std::size_t>(state.range(0)), 9);
  const auto inst = GenInstance::uniform(g, 2, 2, Sense::Pack);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force(inst));
}
BENCHMARK(BM_BruteForceTree)->DenseRange(6, 12, 2);

}  // namespace

BENCHMARK_MAIN();
