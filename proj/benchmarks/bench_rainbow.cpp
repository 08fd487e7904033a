#include <benchmark/benchmark.h>

#include "rcgraph/decompose.hpp"
#include "rcgraph/generators.hpp"
#include "rcgraph/rainbow.hpp"
#include "rcgraph/structure.hpp"

using namespace rcg;

namespace {

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

void BM_EarDecomposition(benchmark::State& state) {
    Graph g = random_two_connected(static_cast<int>(state.range(0)), 3, 99);
    for (auto _ : state) benchmark::DoNotOptimize(ear_decomposition(g, 0));
}
BENCHMARK(BM_EarDecomposition)->Arg(8)->Arg(12)->Arg(16);

void BM_TwoConnectedColoring(benchmark::State& state) {
    Graph g = random_two_connected(static_cast<int>(state.range(0)), 3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(two_connected_coloring(g));
}
BENCHMARK(BM_TwoConnectedColoring)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_BlockwiseColoring(benchmark::State& state) {
    Graph g = tight_block_chain({4, 1, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(blockwise_coloring(g));
}
BENCHMARK(BM_BlockwiseColoring)->Arg(10)->Arg(12)->Arg(14);

void BM_VerifyRainbow(benchmark::State& state) {
    Graph g = random_two_connected(static_cast<int>(state.range(0)), 3, 21);
    EdgeColoring c = two_connected_coloring(g).coloring;
    for (auto _ : state) benchmark::DoNotOptimize(verify_rainbow(g, c));
}
BENCHMARK(BM_VerifyRainbow)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_ExactSearchCycle(benchmark::State& state) {
    Graph g = cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exact_rc(g));
}
BENCHMARK(BM_ExactSearchCycle)->Arg(7)->Arg(9)->Arg(11);

void BM_ExactSearchChain(benchmark::State& state) {
    Graph g = tight_block_chain({3, 1, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(exact_rc(g));
}
BENCHMARK(BM_ExactSearchChain)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
