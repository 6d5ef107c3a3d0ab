// Serial reference enumeration against the parallel pruned engine.

#include <benchmark/benchmark.h>

#include <random>

#include "tough/families.hpp"
#include "tough/toughness.hpp"

namespace {

tough::Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<tough::Vertex, tough::Vertex>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(static_cast<tough::Vertex>(u), static_cast<tough::Vertex>(v));
    return tough::build_graph(n, edges);
}

const tough::Graph& instance(int which)
{
    static const tough::Graph graphs[] = {
        tough::gen_knp3(6, false).graph,  // 18 vertices
        tough::gen_square_lsk4().graph,   // 12 vertices, dense
        random_graph(20, 0.3, 42),
    };
    return graphs[which];
}

void BM_reference(benchmark::State& state)
{
    const tough::Graph& g = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tough::toughness_reference(g));
    state.SetLabel(std::to_string(g.order()) + " vertices");
}

void BM_exact(benchmark::State& state)
{
    const tough::Graph& g = instance(static_cast<int>(state.range(0)));
    tough::ExactConfig cfg;
    cfg.threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(tough::toughness_exact(g, cfg));
    state.SetLabel(std::to_string(g.order()) + " vertices");
}

void BM_exact_unpruned(benchmark::State& state)
{
    const tough::Graph& g = instance(static_cast<int>(state.range(0)));
    tough::ExactConfig cfg;
    cfg.threads = static_cast<int>(state.range(1));
    cfg.prune_connectivity = cfg.prune_independence = cfg.prune_twins = false;
    for (auto _ : state) benchmark::DoNotOptimize(tough::toughness_exact(g, cfg));
    state.SetLabel(std::to_string(g.order()) + " vertices");
}

}  // namespace

BENCHMARK(BM_reference)->DenseRange(0, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_exact)->ArgsProduct({{0, 1, 2}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_exact_unpruned)->ArgsProduct({{0, 1, 2}, {1, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
