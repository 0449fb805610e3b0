#include <swiptfog/analysis.hpp>
#include <swiptfog/channel.hpp>
#include <swiptfog/local_solver.hpp>
#include <swiptfog/mode_selector.hpp>
#include <swiptfog/offload_solver.hpp>
#include <swiptfog/oracle.hpp>

#include <benchmark/benchmark.h>

using namespace swiptfog;

namespace {

LinkGains block_gains(const SystemParams& p) {
    return gen_channel(p, single_mu_geometry(10.0, 8.0), 0, 1).gains();
}

void BM_SolveLocal(benchmark::State& state) {
    const SystemParams p;
    const auto g = block_gains(p);
    for (auto _ : state) benchmark::DoNotOptimize(solve_local(p, g.ap_u, 0.0, 0.0));
}
BENCHMARK(BM_SolveLocal);

void BM_SolveOffload(benchmark::State& state) {
    const SystemParams p;
    const auto g = block_gains(p);
    for (auto _ : state) benchmark::DoNotOptimize(solve_offload(p, g, 0.0, 0.0));
}
BENCHMARK(BM_SolveOffload);

void BM_SelectMode(benchmark::State& state) {
    const SystemParams p;
    const auto g = block_gains(p);
    for (auto _ : state) benchmark::DoNotOptimize(select_mode(p, g, 0.0, 0.0));
}
BENCHMARK(BM_SelectMode);

void BM_GridLocal(benchmark::State& state) {
    const SystemParams p;
    const auto g = block_gains(p);
    const GridOptions o{static_cast<int>(state.range(0)), 0};
    for (auto _ : state) benchmark::DoNotOptimize(grid_search_local(p, g.ap_u, 0.0, 0.0, o));
}
BENCHMARK(BM_GridLocal)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_GridOffload(benchmark::State& state) {
    const SystemParams p;
    const auto g = block_gains(p);
    const GridOptions o{static_cast<int>(state.range(0)), 0};
    for (auto _ : state) benchmark::DoNotOptimize(grid_search_offload(p, g, 0.0, 0.0, o));
}
BENCHMARK(BM_GridOffload)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_LambertW(benchmark::State& state) {
    const auto branch = state.range(0) == 0 ? LambertBranch::Principal : LambertBranch::Lower;
    double x = -0.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lambert_w(x, branch));
        x = x < -0.36 ? -1e-6 : x - 1e-3;
    }
}
BENCHMARK(BM_LambertW)->Arg(0)->Arg(1);

void BM_KThreshold(benchmark::State& state) {
    const SystemParams p;
    const auto g = block_gains(p);
    for (auto _ : state) benchmark::DoNotOptimize(k_threshold(p, g));
}
BENCHMARK(BM_KThreshold)->Unit(benchmark::kMicrosecond);

} // namespace
