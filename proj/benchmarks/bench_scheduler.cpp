#include <swiptfog/channel.hpp>
#include <swiptfog/random.hpp>
#include <swiptfog/scheduler.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace swiptfog;

namespace {

struct Drop {
    std::vector<LinkGains> gains;
    std::vector<double> e_s;
};

// MUs on an annulus of radius [2, 15] m around the HAP.
Drop drop(const SystemParams& p, std::size_t m) {
    Geometry geo;
    auto eng = make_engine(7, Stream::Placement, {m});
    for (std::size_t i = 0; i < m; ++i) {
        const double r = 2.0 + 13.0 * uniform01(eng);
        const double a = 2.0 * std::numbers::pi * uniform01(eng);
        geo.mu_pos.push_back({r * std::cos(a), r * std::sin(a)});
    }
    Drop d;
    for (std::size_t i = 0; i < m; ++i) d.gains.push_back(gen_channel(p, geo, i, 7).gains());
    d.e_s.assign(m, 0.0);
    return d;
}

void BM_Greedy(benchmark::State& state) {
    const SystemParams p;
    const auto d = drop(p, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(greedy_schedule(p, d.gains, d.e_s));
}
BENCHMARK(BM_Greedy)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_Exhaustive(benchmark::State& state) {
    const SystemParams p;
    const auto d = drop(p, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_schedule(p, d.gains, d.e_s));
}
BENCHMARK(BM_Exhaustive)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

} // namespace
