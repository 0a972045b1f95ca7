#include <benchmark/benchmark.h>

#include <magcat/corpus.hpp>
#include <magcat/fcat.hpp>
#include <magcat/maghom.hpp>
#include <magcat/magnitude.hpp>
#include <magcat/specseq.hpp>

using namespace magcat;

namespace {

Exponent exp_q(long n) { return Exponent(Rational(n)); }

void BM_MagnitudeNeumann(benchmark::State& state) {
    FCat k33 = grothendieck(corpus::k33_action());
    Exponent cutoff(Rational(state.range(0)));
    for (auto _ : state) {
        NSeries m = magnitude(k33, cutoff);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_MagnitudeNeumann)->Arg(4)->Arg(8)->Arg(16);

void BM_PathExpansion(benchmark::State& state) {
    FCat c5 = corpus::cycle_graph(5);
    Exponent cutoff(Rational(state.range(0)));
    for (auto _ : state) {
        NSeries m = path_expansion_magnitude(c5, cutoff);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_PathExpansion)->Arg(4)->Arg(6)->Arg(8);

void BM_MagnitudeHomology(benchmark::State& state) {
    FCat c5 = corpus::cycle_graph(5);
    long l = state.range(0);
    for (auto _ : state) {
        HomologySummary h = magnitude_homology(c5, exp_q(l), static_cast<int>(l));
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_MagnitudeHomology)->Arg(2)->Arg(3)->Arg(4);

void BM_SpectralPage(benchmark::State& state) {
    FCat dia = from_digraph(corpus::diamond());
    FilteredChainQ fc = build_filtered_chain(dia, state.range(0), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        PageEntry e = page(fc, 2, 1, 0);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_SpectralPage)->Arg(4)->Arg(5);

void BM_ZetaInverseConstantTerm(benchmark::State& state) {
    FCat face = corpus::triangle_boundary_category();
    Exponent cutoff(Rational(state.range(0)));
    for (auto _ : state) {
        SeriesMatrix inv = zeta_inverse(zeta_matrix(face, cutoff));
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_ZetaInverseConstantTerm)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
