// Microbenchmarks for the hot paths: policy serve throughput, the LFD oracle
// and ground-truth generation.

#include <benchmark/benchmark.h>

#include "paging/adversary.hpp"
#include "paging/offline.hpp"
#include "paging/policies.hpp"
#include "paging/policy.hpp"
#include "paging/rng.hpp"

using namespace paging;

namespace {

Trace uniform_trace(int k, std::size_t n, std::size_t universe) {
    CounterRng rng(12345);
    std::vector<std::uint64_t> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = 1 + rng.uniform_below(universe);
    return make_trace(k, raw, std::vector<Bit>(n, 0), Setup::none, "bench");
}

void bench_policy_serve(benchmark::State& state, const char* id) {
    const int k = static_cast<int>(state.range(0));
    Trace t = uniform_trace(k, 1 << 16, static_cast<std::size_t>(2 * k));
    for (auto _ : state) {
        auto policy = make_policy(id, k, t.num_pages(), 1);
        benchmark::DoNotOptimize(run_policy(*policy, t, t.predictions, false).faults);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * t.size());
}

void bench_lfd(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    Trace t = uniform_trace(k, 1 << 16, static_cast<std::size_t>(2 * k));
    for (auto _ : state) benchmark::DoNotOptimize(lfd_run(t).first.opt_cost);
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * t.size());
}

void bench_phase_truth(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    Trace t = uniform_trace(k, 1 << 16, static_cast<std::size_t>(2 * k));
    for (auto _ : state) benchmark::DoNotOptimize(ground_truth_phase(t).bits.size());
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * t.size());
}

void bench_block_generation(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(block_instance(k, 1000, 0, 1).size());
}

}  // namespace

BENCHMARK_CAPTURE(bench_policy_serve, lru, "lru")->Arg(16)->Arg(256);
BENCHMARK_CAPTURE(bench_policy_serve, mark, "mark")->Arg(16)->Arg(256);
BENCHMARK_CAPTURE(bench_policy_serve, mark0, "mark0")->Arg(16)->Arg(256);
BENCHMARK_CAPTURE(bench_policy_serve, mark_predict, "mark-predict")->Arg(16)->Arg(256);
BENCHMARK(bench_lfd)->Arg(16)->Arg(256);
BENCHMARK(bench_phase_truth)->Arg(16)->Arg(256);
BENCHMARK(bench_block_generation)->Arg(8)->Arg(64);

BENCHMARK_MAIN();
