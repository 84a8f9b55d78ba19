// Serial reference vs OpenMP kernels.
//
//   ./fiblucas_bench --benchmark_filter=Verify

#include <benchmark/benchmark.h>

#include <thread>

#include "fiblucas/identities.hpp"
#include "fiblucas/theorem.hpp"

namespace {

using namespace fiblucas;

void BM_VerifySerial(benchmark::State& state) {
    const PrimeRange range{3, static_cast<std::uint64_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(verify_range_serial(range).primes_checked);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyOmp(benchmark::State& state) {
    const PrimeRange range{3, static_cast<std::uint64_t>(state.range(0))};
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(verify_range(range, threads).primes_checked);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_IdentitiesSerial(benchmark::State& state) {
    const IdentityGrid grid{static_cast<Index>(state.range(0)), static_cast<Index>(state.range(0)),
                            static_cast<Index>(state.range(0)), 0};
    for (auto _ : state) benchmark::DoNotOptimize(sweep_identities_serial(grid).all_passed());
}

void BM_IdentitiesOmp(benchmark::State& state) {
    const IdentityGrid grid{static_cast<Index>(state.range(0)), static_cast<Index>(state.range(0)),
                            static_cast<Index>(state.range(0)), 0};
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(sweep_identities(grid, threads).all_passed());
}

void BM_FibPairMod(benchmark::State& state) {
    const Modulus m{9223372036854775783u};
    Index n = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fib_pair_mod(n, m).first);
        n = n * 6364136223846793005u % kMaxWord + 1;
    }
}

void BM_FibPairExact(benchmark::State& state) {
    const auto n = static_cast<Index>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fib_pair(n).first.fits_u64());
}

void thread_args(benchmark::internal::Benchmark* b, std::int64_t size) {
    const auto hw = static_cast<std::int64_t>(std::max(1u, std::thread::hardware_concurrency()));
    for (std::int64_t t = 1; t <= hw; t *= 2) b->Args({size, t});
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyOmp)
    ->Apply([](auto* b) { thread_args(b, 1'000'000); })
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_IdentitiesSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentitiesOmp)
    ->Apply([](auto* b) { thread_args(b, 200); })
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_FibPairMod);
BENCHMARK(BM_FibPairExact)->Arg(1000)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
