#include <stokes/certify.hpp>
#include <stokes/collision.hpp>
#include <stokes/index.hpp>
#include <stokes/spectrum.hpp>

#include <benchmark/benchmark.h>

namespace
{

using namespace stokes;

const Interval sign_domain(0.380338, 2.0);

void BM_sign_serial(benchmark::State &st)
{
    for (auto _ : st) {
        benchmark::DoNotOptimize(certify_sign_adaptive_serial(Quantity::gamma_top, sign_domain, Verdict::positive));
    }
}

void BM_sign_parallel(benchmark::State &st)
{
    for (auto _ : st) {
        benchmark::DoNotOptimize(certify_sign_adaptive(Quantity::gamma_top, sign_domain, Verdict::positive));
    }
}

void BM_d7_serial(benchmark::State &st)
{
    for (auto _ : st) {
        benchmark::DoNotOptimize(
            certify_sign_adaptive_serial(Quantity::gamma_top_d7, Interval(0.0, 0.15), Verdict::negative));
    }
}

void BM_d7_parallel(benchmark::State &st)
{
    for (auto _ : st) {
        benchmark::DoNotOptimize(certify_sign_adaptive(Quantity::gamma_top_d7, Interval(0.0, 0.15), Verdict::negative));
    }
}

void BM_curve_serial(benchmark::State &st)
{
    const WaveParams p = WaveParams::from_kappa(Interval(1.0));
    for (auto _ : st) {
        benchmark::DoNotOptimize(sample_curve_serial(p, 0.3, 201));
    }
}

void BM_curve_parallel(benchmark::State &st)
{
    const WaveParams p = WaveParams::from_kappa(Interval(1.0));
    for (auto _ : st) {
        benchmark::DoNotOptimize(sample_curve(p, 0.3, 201));
    }
}

std::vector<double> scan_ells()
{
    std::vector<double> v;
    for (int i = 1; i <= 100; ++i) {
        v.push_back(0.001 * i);
    }
    return v;
}

void BM_index_serial(benchmark::State &st)
{
    const auto ells = scan_ells();
    for (auto _ : st) {
        benchmark::DoNotOptimize(index_scan_serial(1.0, ells));
    }
}

void BM_index_parallel(benchmark::State &st)
{
    const auto ells = scan_ells();
    for (auto _ : st) {
        benchmark::DoNotOptimize(index_scan(1.0, ells));
    }
}

ScanOptions small_scan()
{
    ScanOptions o;
    o.N = 16;
    o.n_xi = 32;
    o.refine_steps = 0;
    return o;
}

void BM_growth_serial(benchmark::State &st)
{
    for (auto _ : st) {
        benchmark::DoNotOptimize(growth_scan_serial(1.0, 0.1, 0.01, small_scan()));
    }
}

void BM_growth_parallel(benchmark::State &st)
{
    for (auto _ : st) {
        benchmark::DoNotOptimize(growth_scan(1.0, 0.1, 0.01, small_scan()));
    }
}

} // namespace

BENCHMARK(BM_sign_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sign_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_d7_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_d7_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_curve_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_curve_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_index_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_index_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_growth_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_growth_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
