#include <ckspectra/generators.hpp>
#include <ckspectra/ideals.hpp>
#include <ckspectra/tails.hpp>
#include <ckspectra/topology.hpp>

#include <benchmark/benchmark.h>

using namespace ckspectra;

namespace {

Graph bench_graph(std::int64_t n) {
    RandomGraphOptions o;
    o.vertices = static_cast<std::size_t>(n);
    o.density = 0.25;
    o.omega_prob = 0.3;
    return random_condition_k_graph(42, o);
}

void BM_MaximalTails(benchmark::State& state) {
    const Graph g = bench_graph(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(maximal_tails(g));
}
BENCHMARK(BM_MaximalTails)->DenseRange(4, 16, 4);

void BM_AdmissiblePairs(benchmark::State& state) {
    const Graph g = bench_graph(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(admissible_pairs(g));
}
BENCHMARK(BM_AdmissiblePairs)->DenseRange(4, 16, 4);

void BM_ClassifyAll(benchmark::State& state) {
    const Graph g = bench_graph(state.range(0));
    const auto pairs = admissible_pairs(g);
    for (auto _ : state)
        for (const AdmissiblePair& p : pairs)
            benchmark::DoNotOptimize(classify_ideal(g, p));
    state.counters["pairs"] = static_cast<double>(pairs.size());
}
BENCHMARK(BM_ClassifyAll)->DenseRange(4, 12, 4);

void BM_VerifyHomeomorphismRefined(benchmark::State& state) {
    const Graph g = bench_graph(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_homeomorphism(g, kDefaultExhaustiveLimit, kDefaultSeed, 500,
                                                      kDefaultEnumerationLimit, ClosureRule::Refined));
}
BENCHMARK(BM_VerifyHomeomorphismRefined)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_RunningExampleVerify(benchmark::State& state) {
    const Graph g = running_example().graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_homeomorphism(g, kDefaultExhaustiveLimit, kDefaultSeed, 500,
                                                      kDefaultEnumerationLimit, ClosureRule::Refined));
}
BENCHMARK(BM_RunningExampleVerify);

} // namespace

BENCHMARK_MAIN();
