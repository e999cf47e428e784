// Serial reference vs OpenMP kernels on identical inputs.

#include <benchmark/benchmark.h>

#include <vector>

#include "smt/batch.hpp"
#include "smt/loci.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace {

const std::vector<smt::Quad>& quads(std::size_t n) {
    static const std::vector<smt::Quad> all = smt::test::random_valid_quads(20000, 7);
    static std::vector<smt::Quad> prefix;
    prefix.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
    return prefix;
}

void BM_Smt4Serial(benchmark::State& state) {
    const auto qs = quads(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smt::solve_smt4_batch_serial(qs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Smt4Parallel(benchmark::State& state) {
    const auto qs = quads(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smt::solve_smt4_batch(qs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OracleSerial(benchmark::State& state) {
    const auto qs = quads(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smt::solve_numeric_batch_serial(qs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OracleParallel(benchmark::State& state) {
    const auto qs = quads(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smt::solve_numeric_batch(qs));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<smt::Point> sweep_path(std::size_t n) {
    const smt::Point ends[] = {smt::test::kLociP3Start, smt::test::kLociP2};
    return smt::sample_polyline(ends, n);
}

void BM_LociSerial(benchmark::State& state) {
    using namespace smt::test;
    const auto path = sweep_path(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smt::loci_sweep_serial(kLociP1, kLociP2, kLociP4, path));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LociParallel(benchmark::State& state) {
    using namespace smt::test;
    const auto path = sweep_path(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(smt::loci_sweep(kLociP1, kLociP2, kLociP4, path));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Smt4Serial)->Arg(1000)->Arg(20000);
BENCHMARK(BM_Smt4Parallel)->Arg(1000)->Arg(20000);
BENCHMARK(BM_OracleSerial)->Arg(200);
BENCHMARK(BM_OracleParallel)->Arg(200);
BENCHMARK(BM_LociSerial)->Arg(1000)->Arg(100000);
BENCHMARK(BM_LociParallel)->Arg(1000)->Arg(100000);
BENCHMARK_MAIN();
