#include <benchmark/benchmark.h>

#include <vtutte/enumeration.hpp>
#include <vtutte/poset.hpp>
#include <vtutte/rooted_tree.hpp>
#include <vtutte/vposet.hpp>

using namespace vtutte;

static void BM_TreePoly(benchmark::State& state) {
  const auto trees = enumerate_rooted_trees(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& t : trees) benchmark::DoNotOptimize(tree_poly(t));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(trees.size()));
}
BENCHMARK(BM_TreePoly)->Arg(8)->Arg(10);

static void BM_TreeExpansion(benchmark::State& state) {
  const auto trees = enumerate_rooted_trees(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& t : trees) benchmark::DoNotOptimize(antichain_expansion_tree(t));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(trees.size()));
}
BENCHMARK(BM_TreeExpansion)->Arg(8)->Arg(10);

static void BM_TreeDeletionContraction(benchmark::State& state) {
  const auto trees = enumerate_rooted_trees(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& t : trees) benchmark::DoNotOptimize(tree_poly_dc(t));
}
BENCHMARK(BM_TreeDeletionContraction)->Arg(8);

static void BM_RecogniseLabeled(benchmark::State& state) {
  const auto posets = enumerate_labeled_posets(5);
  for (auto _ : state)
    for (const auto& p : posets) benchmark::DoNotOptimize(decompose(p).has_value());
}
BENCHMARK(BM_RecogniseLabeled);

static void BM_PosetPolyCensus(benchmark::State& state) {
  const auto c = build_census(7);
  for (auto _ : state)
    for (const auto& p : c.all[7]) benchmark::DoNotOptimize(poset_poly(p));
}
BENCHMARK(BM_PosetPolyCensus);

static void BM_PosetExpansionCensus(benchmark::State& state) {
  const auto c = build_census(7);
  for (auto _ : state)
    for (const auto& p : c.all[7]) benchmark::DoNotOptimize(poset_L_poly(p));
}
BENCHMARK(BM_PosetExpansionCensus);

static void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(census(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Census)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_VSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(v_series(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_VSeries)->Arg(100)->Arg(500);

static void BM_AsymptoticConstant(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(asymptotic_constant(100));
}
BENCHMARK(BM_AsymptoticConstant)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
