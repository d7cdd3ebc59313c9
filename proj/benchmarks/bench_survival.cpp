#include <evw/frame.hpp>
#include <evw/models.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace evw;

void BM_survival_weight(benchmark::State& state) {
    SurvivalModel model(state.range(0));
    auto h = make_rate_hypothesis(model.frame(), Rational(4, 5), RateDirection::at_least);
    auto h2 = make_rate_hypothesis(model.frame(), Rational(1, 5), RateDirection::exactly);
    for (auto _ : state) {
        benchmark::DoNotOptimize(survival_weight(model, 39, 1, h, h2));
    }
}
BENCHMARK(BM_survival_weight)->Arg(250)->Arg(500)->Arg(1000);

void BM_survival_mass_mixed(benchmark::State& state) {
    SurvivalModel model(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(survival_mass_mixed(model, 3, 2));
    }
}
BENCHMARK(BM_survival_mass_mixed)->Arg(20)->Arg(40)->Arg(80);

void BM_jordan_power(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(jordan_power(state.range(0), 6));
    }
}
BENCHMARK(BM_jordan_power)->Arg(8)->Arg(12);

} // namespace

BENCHMARK_MAIN();
