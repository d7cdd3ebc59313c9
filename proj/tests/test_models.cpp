#include <doctest.h>

#include <evw/error.hpp>
#include <evw/evidence.hpp>
#include <evw/models.hpp>

#include <vector>

using namespace evw;

namespace {

ObservationTally survival_tally(std::uint64_t live, std::uint64_t die) {
    ObservationTally t;
    if (live > 0) t.add("live", live);
    if (die > 0) t.add("die", die);
    return t;
}

} // namespace

TEST_CASE("survival models validate their population") {
    CHECK_THROWS_AS(SurvivalModel(0), input_error);
    CHECK_THROWS_AS(build_survival_gfm(-3), input_error);
    SurvivalModel m(4);
    CHECK(m.population_size() == 4);
    CHECK(m.frame().size() == 5);
}

TEST_CASE("two survivors out of four leave the published interval masses") {
    SurvivalModel m(4);
    MassFunction mass = survival_mass_all_live(m, 2);
    CHECK(mass.focal_count() == 4);
    const std::vector<std::pair<std::int64_t, Rational>> expected = {
        {1, Rational(1, 16)}, {2, Rational(3, 16)}, {3, Rational(5, 16)}, {4, Rational(7, 16)}};
    for (const auto& [lo, want] : expected) {
        Hypothesis h = make_interval_hypothesis(m.frame(), lo, 4);
        CHECK(mass.focal().at(h.members()) == want);
    }
    CHECK_THROWS_AS(survival_mass_all_live(m, 0), input_error);
}

TEST_CASE("deaths mirror survivals on the other side of the frame") {
    SurvivalModel m(4);
    MassFunction mass = survival_mass_all_die(m, 1);
    CHECK(mass.focal_count() == 4);
    for (std::int64_t hi = 0; hi <= 3; ++hi) {
        Hypothesis h = make_interval_hypothesis(m.frame(), 0, hi);
        CHECK(mass.focal().at(h.members()) == Rational(1, 4));
    }
}

TEST_CASE("closed-form masses match the generic evidence engine") {
    for (std::int64_t n = 2; n <= 5; ++n) {
        SurvivalModel model(n);
        auto gfm = model.to_gfm();
        for (std::uint64_t live = 0; live <= 3; ++live) {
            for (std::uint64_t die = 0; die <= 2; ++die) {
                if (live + die == 0) continue;
                MassFunction closed =
                    die == 0   ? survival_mass_all_live(model, live)
                    : live == 0 ? survival_mass_all_die(model, die)
                                : survival_mass_mixed(model, live, die);
                CombinationReport generic = observe_tally(gfm, survival_tally(live, die));
                CHECK(closed == generic.result);
            }
        }
    }
}

TEST_CASE("one survivor and one death in a population of one cannot both happen") {
    SurvivalModel one(1);
    CHECK_THROWS_AS(survival_mass_mixed(one, 1, 1), undefined_error);
    CHECK_THROWS_AS(survival_classification(one, 1, 1), undefined_error);
    CHECK_THROWS_AS(survival_mass_mixed(SurvivalModel(3), 1, 0), input_error);
}

TEST_CASE("the normalizer is symmetric between survivors and deaths") {
    SurvivalModel m(7);
    for (std::uint64_t a = 1; a <= 4; ++a) {
        for (std::uint64_t b = 1; b <= 4; ++b) {
            CHECK(survival_normalizer(m, a, b) == survival_normalizer(m, b, a));
        }
    }
}

TEST_CASE("singleton plausibility has the product closed form") {
    SurvivalModel m(6);
    Rational k = survival_normalizer(m, 2, 2);
    for (std::int64_t theta = 0; theta <= 6; ++theta) {
        Hypothesis h(m.frame(), std::vector<std::int64_t>{theta});
        Rational numerator = Rational(theta).pow(2) * Rational(6 - theta).pow(2);
        CHECK(survival_plausibility(m, 2, 2, h) == numerator / k);
    }
}

TEST_CASE("interval plausibility agrees with the materialized mass function") {
    SurvivalModel m(5);
    MassFunction mixed = survival_mass_mixed(m, 2, 1);
    for (std::int64_t lo = 0; lo <= 5; ++lo) {
        for (std::int64_t hi = lo; hi <= 5; ++hi) {
            Rational closed = survival_plausibility_interval(m, 2, 1, lo, hi);
            Rational direct = plausibility(mixed, make_interval_hypothesis(m.frame(), lo, hi));
            CHECK(closed == direct);
        }
    }
    CHECK_THROWS_AS(survival_plausibility_interval(m, 2, 1, 2, 6), input_error);
    CHECK_THROWS_AS(survival_plausibility_interval(m, 2, 0, 1, 3), input_error);
}

TEST_CASE("plausibility of gappy hypotheses sums runs and subtracts bridges") {
    SurvivalModel m(6);
    MassFunction mixed = survival_mass_mixed(m, 2, 2);
    for (unsigned long bits = 1; bits < 128; ++bits) {
        Hypothesis h(m.frame(), IndexSet(7, bits));
        CHECK(survival_plausibility(m, 2, 2, h) == plausibility(mixed, h));
    }
}

TEST_CASE("one-sided records have one-sided plausibilities") {
    SurvivalModel m(5);
    Hypothesis h = make_interval_hypothesis(m.frame(), 2, 4);
    CHECK(survival_plausibility(m, 3, 0, h) == Rational(4, 5).pow(3));
    CHECK(survival_plausibility(m, 0, 2, h) == Rational(3, 5).pow(2));
    CHECK(survival_plausibility(m, 3, 0, Hypothesis::empty(m.frame())).is_zero());
}

TEST_CASE("all-live evidence against disjoint rate bands is a power of five") {
    SurvivalModel m(250);
    Hypothesis high = make_rate_hypothesis(m.frame(), Rational(4, 5), RateDirection::at_least);
    Hypothesis low = make_rate_hypothesis(m.frame(), Rational(1, 5), RateDirection::exactly);
    for (std::uint64_t live : {std::uint64_t{1}, std::uint64_t{5}, std::uint64_t{39}}) {
        LogWeight w = survival_weight(m, live, 0, high, low);
        CHECK(w == Rational(5).pow(static_cast<long long>(live)));
    }
}

TEST_CASE("classification follows the record structure") {
    CHECK(survival_classification(SurvivalModel(5), 3, 0) == Classification::consonant);
    CHECK(survival_classification(SurvivalModel(5), 0, 2) == Classification::consonant);
    CHECK(survival_classification(SurvivalModel(1), 2, 0) == Classification::precise);
    CHECK(survival_classification(SurvivalModel(2), 1, 1) == Classification::precise);
    CHECK(survival_classification(SurvivalModel(5), 1, 1) == Classification::general);
    for (std::int64_t n = 1; n <= 5; ++n) {
        SurvivalModel model(n);
        auto gfm = model.to_gfm();
        for (std::uint64_t live = 0; live <= 2; ++live) {
            for (std::uint64_t die = 0; die <= 2; ++die) {
                if (live + die == 0) continue;
                if (live > 0 && die > 0 && n == 1) continue;
                CombinationReport r = observe_tally(gfm, survival_tally(live, die));
                CHECK(survival_classification(model, live, die) == classify(r.result));
            }
        }
    }
}

TEST_CASE("the transition matrix advances the one-survivor mass vector") {
    for (std::int64_t n : {std::int64_t{3}, std::int64_t{6}, std::int64_t{9}}) {
        TransitionMatrix t = build_transition_matrix(n);
        CHECK(t.is_column_stochastic());
        SurvivalModel model(n);
        std::vector<Rational> vec = survival_mass_vector(model, 1);
        for (std::uint64_t m = 2; m <= 5; ++m) {
            vec = t.apply(vec);
            CHECK(vec == survival_mass_vector(model, m));
        }
    }
    TransitionMatrix two = build_transition_matrix(2);
    CHECK(two.matrix().at(0, 0) == Rational(1, 2));
    CHECK(two.matrix().at(1, 0) == Rational(1, 2));
    CHECK(two.matrix().at(0, 1).is_zero());
    CHECK(two.matrix().at(1, 1) == Rational(1));
}

TEST_CASE("matrix powers through the eigenbasis match repeated products") {
    for (std::int64_t n : {std::int64_t{2}, std::int64_t{5}, std::int64_t{8}}) {
        TransitionMatrix t = build_transition_matrix(n);
        RationalMatrix repeated = RationalMatrix::identity(static_cast<std::size_t>(n));
        for (std::uint64_t k = 0; k <= 5; ++k) {
            CHECK(jordan_power(n, k) == repeated);
            repeated = repeated * t.matrix();
        }
    }
}

TEST_CASE("ever-longer survival records concentrate on full survival") {
    SurvivalModel m(5);
    Hypothesis top(m.frame(), std::vector<std::int64_t>{5});
    Rational previous;
    for (std::uint64_t k = 1; k <= 8; ++k) {
        Rational at_top = belief(survival_mass_all_live(m, k), top);
        CHECK(at_top == Rational(1) - Rational(4, 5).pow(static_cast<long long>(k)));
        CHECK(at_top > previous);
        previous = at_top;
    }
    MassFunction limit = limit_mass_all_live(m);
    CHECK(limit.focal_count() == 1);
    CHECK(belief(limit, top) == Rational(1));
}

TEST_CASE("rational matrices invert and multiply consistently") {
    RationalMatrix a(2, 2);
    a.at(0, 0) = Rational(1);
    a.at(0, 1) = Rational(2);
    a.at(1, 0) = Rational(3);
    a.at(1, 1) = Rational(4);
    RationalMatrix inv = a.inverse();
    CHECK(a * inv == RationalMatrix::identity(2));
    CHECK(inv * a == RationalMatrix::identity(2));

    RationalMatrix singular(2, 2);
    singular.at(0, 0) = Rational(1);
    singular.at(0, 1) = Rational(2);
    singular.at(1, 0) = Rational(2);
    singular.at(1, 1) = Rational(4);
    CHECK_THROWS_AS(singular.inverse(), error);
}
