#include <benchmark/benchmark.h>

#include "pcube/bridge.hpp"
#include "pcube/canonical.hpp"
#include "pcube/minors.hpp"
#include "pcube/recognize.hpp"

using namespace pcube;

namespace {

PartialCube big_lop() {
    PartialCube big = generate(Family::Cube, 5);
    int tip = 0;
    for (int i = 0; i < 64; ++i) {
        int n = big.vertex_count();
        ExpansionSpec spec{VertexSet::full(n), VertexSet(n)};
        spec.v2.set(tip);
        big = expand(big, spec);
        tip = big.vertex_count() - 1;
    }
    return big;
}

void BM_EmbedPuncturedStar(benchmark::State& state) {
    Graph g = generate(Family::QMinusStar, 5).to_graph();
    for (auto _ : state) benchmark::DoNotOptimize(embed_partial_cube(g));
}
BENCHMARK(BM_EmbedPuncturedStar)->Unit(benchmark::kMillisecond);

void BM_ClassifyPuncturedStar(benchmark::State& state) {
    PartialCube star = generate(Family::QMinusStar, 5);
    for (auto _ : state) benchmark::DoNotOptimize(classify_graph(star));
}
BENCHMARK(BM_ClassifyPuncturedStar)->Unit(benchmark::kMillisecond);

void BM_ClassifyBigLop(benchmark::State& state) {
    PartialCube big = big_lop();
    for (auto _ : state) benchmark::DoNotOptimize(classify_graph(big));
}
BENCHMARK(BM_ClassifyBigLop)->Unit(benchmark::kMillisecond);

void BM_CanonicalKeyCube(benchmark::State& state) {
    PartialCube q6 = generate(Family::Cube, 6);
    std::vector<CoordSet> coords;
    for (int v = 0; v < q6.vertex_count(); ++v) coords.push_back(q6.coords(v));
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_key_of_coords(q6.class_count(), coords));
}
BENCHMARK(BM_CanonicalKeyCube)->Unit(benchmark::kMillisecond);

void BM_MinorNegative(benchmark::State& state) {
    PartialCube host = generate(Family::Cube, 6);
    PartialCube pattern = generate(Family::CubeMinusAntipodes, 3);
    for (auto _ : state) benchmark::DoNotOptimize(pc_minor(host, pattern));
}
BENCHMARK(BM_MinorNegative)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_Enumerate7(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_partial_cubes(7));
}
BENCHMARK(BM_Enumerate7)->Unit(benchmark::kMillisecond);

void BM_CovectorsQ4(benchmark::State& state) {
    PartialCube q4 = generate(Family::Cube, 4);
    for (auto _ : state) benchmark::DoNotOptimize(covectors_of(q4));
}
BENCHMARK(BM_CovectorsQ4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
