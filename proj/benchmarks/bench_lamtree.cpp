#include <benchmark/benchmark.h>

#include "lamtree/labeler.hpp"
#include "lamtree/oracle.hpp"
#include "lamtree/partitions.hpp"
#include "lamtree/verifier.hpp"

namespace {

void BM_label_tree(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(lamtree::label_tree(t, n));
    state.SetItemsProcessed(state.iterations() * lamtree::TaryTree(t, n).edge_count());
}
BENCHMARK(BM_label_tree)->Args({2, 8})->Args({2, 12})->Args({3, 8})->Args({6, 6});

void BM_tuple_partition(benchmark::State& state) {
    const std::int64_t count = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(lamtree::tuple_partition(5, count, 1));
    state.SetItemsProcessed(state.iterations() * count * 5);
}
BENCHMARK(BM_tuple_partition)->Arg(1000)->Arg(100000);

void BM_verify(benchmark::State& state) {
    const lamtree::EdgeLabeling labeling =
        lamtree::label_tree(2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lamtree::check(labeling));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(labeling.labels.size()));
}
BENCHMARK(BM_verify)->Arg(8)->Arg(12);

void BM_chi_la(benchmark::State& state) {
    lamtree::ExplicitTree star;
    star.nodes = state.range(0) + 1;
    for (int v = 1; v <= state.range(0); ++v) star.edges.emplace_back(0, v);
    for (auto _ : state) benchmark::DoNotOptimize(lamtree::brute_force_chi_la(star));
}
BENCHMARK(BM_chi_la)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
