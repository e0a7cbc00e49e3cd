#include <benchmark/benchmark.h>

#include "fockqo/ngbs.hpp"
#include "fockqo/volume.hpp"
#include "fockqo/wigner.hpp"
#include "fockqo/witnesses.hpp"

using namespace fockqo;

namespace {

FockSuperposition table_state() { return ngbs_state(NgbsParams(25, 0.4, 0.5)); }

void BM_WignerKernel(benchmark::State& st) {
    const auto s = ngbs_state(NgbsParams(static_cast<int>(st.range(0)), 0.4, 0.5));
    const WignerKernel w(s);
    double x = -3.0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(w(x, 0.7));
        x += 1e-6;
    }
}
BENCHMARK(BM_WignerKernel)->Arg(5)->Arg(25)->Arg(100);

void BM_WignerSeries(benchmark::State& st) {
    const auto s = table_state();
    for (auto _ : st) benchmark::DoNotOptimize(wigner_series(s, 1.3, -0.4));
}
BENCHMARK(BM_WignerSeries);

void BM_WignerGrid(benchmark::State& st) {
    const auto s = table_state();
    const Axis axis{-8, 8, 201};
    for (auto _ : st)
        benchmark::DoNotOptimize(wigner_grid(s, axis, axis, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_WignerGrid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Witnesses(benchmark::State& st) {
    const auto s = table_state();
    for (auto _ : st) {
        benchmark::DoNotOptimize(hoa(s, 3));
        benchmark::DoNotOptimize(hong_mandel_hos(s, 4));
        benchmark::DoNotOptimize(agarwal_tara(s, 3));
        benchmark::DoNotOptimize(vogel_determinant(s, 4));
    }
}
BENCHMARK(BM_Witnesses);

void BM_VolumeFock1(benchmark::State& st) {
    const auto s = FockSuperposition::number_state(1);
    for (auto _ : st) benchmark::DoNotOptimize(nonclassical_volume(s));
}
BENCHMARK(BM_VolumeFock1)->Unit(benchmark::kMillisecond);

void BM_VolumeTable(benchmark::State& st) {
    const auto s = table_state();
    VolumeOptions opts;
    opts.workers = static_cast<unsigned>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(nonclassical_volume(s, opts));
}
BENCHMARK(BM_VolumeTable)->Arg(1)->Arg(4)->Iterations(1)->Unit(benchmark::kSecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
