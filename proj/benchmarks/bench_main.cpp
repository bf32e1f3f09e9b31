#include <benchmark/benchmark.h>

#include "squareprod/certificate.hpp"
#include "squareprod/decompose.hpp"
#include "squareprod/gadgets.hpp"
#include "squareprod/generators.hpp"
#include "squareprod/recognize.hpp"

using namespace squareprod;

namespace {

PlaneGraph glued(std::size_t n)
{
    GlueOptions options;
    options.target_vertices = n;
    options.pendant_weight = 0.1;
    return glued_squaregraph(42, options);
}

void BM_IsSquaregraph(benchmark::State& state)
{
    const PlaneGraph g = glued(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_squaregraph(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsSquaregraph)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_LeveledEmbedding(benchmark::State& state)
{
    const PlaneGraph g = glued(static_cast<std::size_t>(state.range(0)));
    const VertexId root = default_root(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(leveled_embedding(g, root));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LeveledEmbedding)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_DecomposeGlued(benchmark::State& state)
{
    const PlaneGraph g = glued(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose_squaregraph(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecomposeGlued)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_DecomposeGrid(benchmark::State& state)
{
    const auto side = static_cast<std::size_t>(state.range(0));
    const PlaneGraph g = grid_plane_graph(side, side);
    for (auto _ : state)
        benchmark::DoNotOptimize(decompose_squaregraph(g));
}
BENCHMARK(BM_DecomposeGrid)->DenseRange(4, 16, 4);

void BM_VerifyCertificate(benchmark::State& state)
{
    const PlaneGraph g = glued(static_cast<std::size_t>(state.range(0)));
    const std::string cert = certificate_json(decompose_squaregraph(g));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_certificate(g, cert));
}
BENCHMARK(BM_VerifyCertificate)->RangeMultiplier(4)->Range(16, 256);

void BM_OuterplanarOracle(benchmark::State& state)
{
    const Graph g = gadget_bipartite(1, 0, 1, static_cast<std::size_t>(state.range(0))).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(is_outerplanar_abstract(g));
}
BENCHMARK(BM_OuterplanarOracle)->DenseRange(5, 13, 4);

void BM_PathwidthGadget(benchmark::State& state)
{
    const Graph g = gadget_plain(2, 1, static_cast<std::size_t>(state.range(0))).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(pathwidth_exact(g));
}
BENCHMARK(BM_PathwidthGadget)->DenseRange(2, 5, 1);

void BM_ForestQuotient(benchmark::State& state)
{
    const Graph g = gadget_bipartite(1, 0, 1, static_cast<std::size_t>(state.range(0))).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(forest_quotient_search(g, 1, g.num_vertices()));
}
BENCHMARK(BM_ForestQuotient)->DenseRange(3, 9, 2);

void BM_SubgraphInjection(benchmark::State& state)
{
    const PlaneGraph g = grid_plane_graph(3, 3);
    const Decomposition d = decompose_squaregraph(g);
    const PairGraph host = product(d.h(), path_graph(d.embedding.path_length + 1), ProductMode::semistrong);
    for (auto _ : state)
        benchmark::DoNotOptimize(subgraph_injection_exists(g.graph(), host));
}
BENCHMARK(BM_SubgraphInjection);

}  // namespace

BENCHMARK_MAIN();
