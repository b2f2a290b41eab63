#include <benchmark/benchmark.h>

#include "seifert/dedekind.hpp"
#include "seifert/invariants.hpp"
#include "seifert/plumbing.hpp"
#include "seifert/torsion.hpp"

using namespace seifert;

namespace {

// |H| = 146, o = 73: both folded parts do real work.
SeifertData medium_manifold() {
    return make_seifert(Int(-3), {{Int(6), Int(5)}, {Int(7), Int(6)}, {Int(8), Int(7)}});
}

// |H| = 4042, near the batch cap.
SeifertData large_manifold() {
    return make_seifert(Int(-3),
                        {{Int(7), Int(3)}, {Int(8), Int(5)}, {Int(9), Int(4)}, {Int(10), Int(7)}});
}

void BM_DedekindSumDirect(benchmark::State& state) {
    Int h(static_cast<long>(state.range(0)) / 3 + 1);
    Int k(static_cast<long>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum(h, k));
}
BENCHMARK(BM_DedekindSumDirect)->Arg(199)->Arg(1999);

void BM_TorsionPerCharacter(benchmark::State& state) {
    SeifertData s = make_seifert(Int(-3), {{Int(2), Int(1)}, {Int(3), Int(1)}, {Int(3), Int(2)}, {Int(4), Int(3)}});
    AbelianGroup g = homology_group(s);
    SpincStructure can = canonical_spinc(s, g);
    for (auto _ : state)
        benchmark::DoNotOptimize(torsion_at_identity(s, g, can, FourierStrategy::PerCharacter));
}
BENCHMARK(BM_TorsionPerCharacter);

void BM_TorsionFolded(benchmark::State& state) {
    SeifertData s = state.range(0) == 0 ? medium_manifold() : large_manifold();
    AbelianGroup g = homology_group(s);
    SpincStructure can = canonical_spinc(s, g);
    for (auto _ : state)
        benchmark::DoNotOptimize(torsion_at_identity(s, g, can, FourierStrategy::Folded));
}
BENCHMARK(BM_TorsionFolded)->Arg(0)->Arg(1);

void BM_CanonicalCycle(benchmark::State& state) {
    // long arms: continued fraction of 97/96 is ninety-six 2s
    SeifertData s = make_seifert(Int(-3), {{Int(97), Int(96)}, {Int(97), Int(96)}, {Int(89), Int(88)}});
    PlumbingGraph graph = plumbing_graph(s);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_cycle(graph));
}
BENCHMARK(BM_CanonicalCycle);

void BM_FullReport(benchmark::State& state) {
    SeifertData s = medium_manifold();
    for (auto _ : state) benchmark::DoNotOptimize(compute_report(s));
}
BENCHMARK(BM_FullReport);

}  // namespace

BENCHMARK_MAIN();
