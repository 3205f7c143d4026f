#include <benchmark/benchmark.h>

#include <weylgr/cartan_scheme.hpp>
#include <weylgr/cluster.hpp>
#include <weylgr/eta_sequence.hpp>
#include <weylgr/root_sequence.hpp>
#include <weylgr/triangulation.hpp>

#include <map>

using namespace weylgr;

namespace {

EtaSequence fan_sequence(int n) {
    return EtaSequence::checked(psi_inverse(Triangulation::fan(n)));
}

void BM_EnumerateSequences(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto v = enumerate_eta_sequences(n);
        benchmark::DoNotOptimize(v);
    }
}

void BM_EnumerateTriangulations(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto v = enumerate_triangulations(n);
        benchmark::DoNotOptimize(v);
    }
}

void BM_HomClosure(benchmark::State& state) {
    const auto scheme = scheme_from_eta(fan_sequence(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto hc = hom_closure(scheme, 0);
        benchmark::DoNotOptimize(hc);
    }
}

void BM_RootsFromScheme(benchmark::State& state) {
    const auto scheme = scheme_from_eta(fan_sequence(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto rs = roots_from_scheme(scheme, 0);
        benchmark::DoNotOptimize(rs);
    }
}

void BM_PsiPoly(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto p = psi_poly(0, n - 1, n);
        benchmark::DoNotOptimize(p);
    }
}

void BM_PtolemyComplete(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto seed = Triangulation::fan(n);
    std::map<Chord, Rational> values;
    for (const auto& d : seed.diagonals())
        values[d] = 1;
    for (auto _ : state) {
        auto lab = ptolemy_complete(seed, values);
        benchmark::DoNotOptimize(lab);
    }
}

void BM_EndGroup(benchmark::State& state) {
    const auto seq = fan_sequence(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto g = end_group(seq);
        benchmark::DoNotOptimize(g);
    }
}

BENCHMARK(BM_EnumerateSequences)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_EnumerateTriangulations)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_HomClosure)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_RootsFromScheme)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(BM_PsiPoly)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_PtolemyComplete)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_EndGroup)->Arg(8)->Arg(12);

} // namespace

BENCHMARK_MAIN();
