#include <evw/gfm.hpp>
#include <evw/mass_function.hpp>
#include <evw/models.hpp>

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace evw;

MassFunction random_mass(const Frame& frame, std::size_t focal_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> bits(1, (1ull << frame.size()) - 1);
    std::uniform_int_distribution<int> weight(1, 20);
    std::vector<std::pair<IndexSet, Rational>> focals;
    long long total = 0;
    std::vector<long long> weights;
    for (std::size_t i = 0; i < focal_count; ++i) {
        IndexSet set(frame.size(), bits(rng));
        weights.push_back(weight(rng));
        total += weights.back();
        focals.emplace_back(std::move(set), Rational(0));
    }
    for (std::size_t i = 0; i < focal_count; ++i) focals[i].second = Rational(weights[i], total);
    return MassFunction::from_focals(frame, focals);
}

void BM_combine_random(benchmark::State& state) {
    Frame frame = Frame::integer_range(0, 9);
    auto a = random_mass(frame, static_cast<std::size_t>(state.range(0)), 7);
    auto b = random_mass(frame, static_cast<std::size_t>(state.range(0)), 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(combine(a, b));
    }
}
BENCHMARK(BM_combine_random)->Arg(8)->Arg(32)->Arg(128);

void BM_observe_tally_urn(benchmark::State& state) {
    auto model = build_urn_gfm1();
    ObservationTally tally;
    tally.add("white", static_cast<std::uint64_t>(state.range(0)));
    tally.add("black", 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(observe_tally(model, tally));
    }
}
BENCHMARK(BM_observe_tally_urn)->Arg(4)->Arg(16)->Arg(64);

void BM_combine_power_survival(benchmark::State& state) {
    SurvivalModel model(40);
    auto one = observe_one(model.to_gfm(), "live");
    for (auto _ : state) {
        benchmark::DoNotOptimize(combine_power(one.result, static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(BM_combine_power_survival)->Arg(4)->Arg(16);

} // namespace

BENCHMARK_MAIN();
