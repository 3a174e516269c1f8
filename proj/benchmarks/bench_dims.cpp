#include <benchmark/benchmark.h>

#include "fricke/dims.hpp"

using namespace fricke;

namespace {

void BM_class_number(benchmark::State& state) {
    long long disc = -4 * state.range(0);
    for (auto _ : state) {
        // enumerate fresh each time to defeat the memo cache
        benchmark::DoNotOptimize(reduced_forms(disc).size());
    }
}
BENCHMARK(BM_class_number)->Arg(221)->Arg(1009)->Arg(10007);

void BM_dim_sweep_gamma0(benchmark::State& state) {
    long long max_n = state.range(0);
    for (auto _ : state) {
        long long acc = 0;
        for (long long N = 2; N <= max_n; ++N)
            for (const QuadChar& chi : list_chars(N))
                for (long long k = 2; k <= 12; ++k) {
                    if (chi.parity() != (k % 2 == 0 ? 1 : -1)) continue;
                    acc += dim_cusp(ExtChar(chi, GroupKind::Gamma0, {}), k);
                }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_dim_sweep_gamma0)->Arg(50)->Arg(150);

void BM_dim_plus(benchmark::State& state) {
    QuadChar chi = parse_char(221, "p13,p17");
    ExtChar xc(chi, GroupKind::Gamma0Plus, {{221, kMinusOne}});
    for (auto _ : state) benchmark::DoNotOptimize(dim_cusp(xc, 6));
}
BENCHMARK(BM_dim_plus);

void BM_star_enumeration(benchmark::State& state) {
    long long N = state.range(0);
    for (auto _ : state) {
        // the per-(N, e) cache makes steady-state cost the lookup itself
        benchmark::DoNotOptimize(star_elliptic_classes(N, N).size());
    }
}
BENCHMARK(BM_star_enumeration)->Arg(221)->Arg(393);

void BM_nu2_star(benchmark::State& state) {
    QuadChar chi = parse_char(221, "p13,p17");
    ExtChar xc(chi, GroupKind::Gamma0Star, {{13, kMinusOne}, {17, kMinusOne}});
    for (auto _ : state) benchmark::DoNotOptimize(nu2_star(xc).re);
}
BENCHMARK(BM_nu2_star);

}  // namespace

BENCHMARK_MAIN();
