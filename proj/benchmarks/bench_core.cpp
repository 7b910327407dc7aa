#include <benchmark/benchmark.h>

#include "epwlab/ideal.hpp"
#include "epwlab/lagrangian.hpp"
#include "epwlab/polymatrix.hpp"

using namespace epwlab;

static void BM_QMatrixRank20(benchmark::State& state) {
    SeededRng rng(1);
    QMatrix m = rng.random_matrix(20, 20, 10);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_QMatrixRank20);

static void BM_GraphLagrangian(benchmark::State& state) {
    SeededRng rng(2);
    Decomposition d = Decomposition::standard();
    QMatrix q = rng.random_symmetric(10, 10);
    for (auto _ : state) benchmark::DoNotOptimize(graph_lagrangian(d, q));
}
BENCHMARK(BM_GraphLagrangian);

static void BM_PolyDet6(benchmark::State& state) {
    SeededRng rng(3);
    auto vs = default_vars("x", 6);
    PolyMatrix m(vs, 6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            std::vector<Term> ts;
            for (int v = 0; v < 6; ++v) {
                Mono mo(6, 0);
                mo[v] = 1;
                ts.push_back({std::move(mo), Rat(rng.next_height(9))});
            }
            m.at(i, j) = MultiPoly::from_terms(vs, std::move(ts));
        }
    for (auto _ : state) benchmark::DoNotOptimize(poly_det(m));
}
BENCHMARK(BM_PolyDet6);

static void BM_HilbertFunctionDeg4(benchmark::State& state) {
    SeededRng rng(4);
    auto vs = default_vars("y", 7);
    std::vector<MultiPoly> gens;
    for (int g = 0; g < 5; ++g) {
        QMatrix gram = rng.random_symmetric(7, 5);
        gens.push_back(quadric_poly(gram, vs));
    }
    Ideal ideal{vs, gens};
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_function(ideal, 4));
}
BENCHMARK(BM_HilbertFunctionDeg4);

BENCHMARK_MAIN();
