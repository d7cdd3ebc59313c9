#include <doctest.h>

#include <evw/error.hpp>
#include <evw/gfm.hpp>
#include <evw/models.hpp>

#include <vector>

using namespace evw;

namespace {

ObservationTally tally(std::uint64_t white, std::uint64_t black) {
    ObservationTally t;
    if (white > 0) t.add("white", white);
    if (black > 0) t.add("black", black);
    return t;
}

} // namespace

TEST_CASE("model construction validates probabilities and the function table") {
    Frame theta = Frame::integer_range(0, 1);
    std::vector<std::string> omega = {"a", "b"};
    std::vector<std::string> outcomes = {"x", "y"};
    CHECK_THROWS_AS(GeneralizedFunctionalModel(theta, omega,
                                               {Rational(1, 2), Rational(1, 3)}, outcomes,
                                               {0, 1, 1, 0}),
                    error);
    CHECK_THROWS_AS(GeneralizedFunctionalModel(theta, omega, {Rational(1), Rational(0)},
                                               outcomes, {0, 1, 1, 0}),
                    error);
    CHECK_THROWS_AS(GeneralizedFunctionalModel(theta, omega,
                                               {Rational(1, 2), Rational(1, 2)}, outcomes,
                                               {0, 1, 1}),
                    error);
    CHECK_THROWS_AS(GeneralizedFunctionalModel(theta, {"a", "a"},
                                               {Rational(1, 2), Rational(1, 2)}, outcomes,
                                               {0, 1, 1, 0}),
                    error);
    CHECK_THROWS_AS(GeneralizedFunctionalModel(theta, omega,
                                               {Rational(1, 2), Rational(1, 2)}, outcomes,
                                               {0, 1, 1, 2}),
                    error);
}

TEST_CASE("a single white observation in the first urn model yields eight focal sets") {
    GeneralizedFunctionalModel m = build_urn_gfm1();
    CombinationReport r = observe_one(m, "white");
    CHECK(r.result.focal_count() == 8);
    CHECK(r.normalization_constant == Rational(1));

    Hypothesis only4(m.theta(), std::vector<std::int64_t>{4});
    CHECK(r.result.focal().at(only4.members()) == Rational(3, 32));
    Hypothesis h34(m.theta(), std::vector<std::int64_t>{3, 4});
    CHECK(r.result.focal().at(h34.members()) == Rational(9, 32));
    Hypothesis all(m.theta(), std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(r.result.focal().at(all.members()) == Rational(3, 32));
    CHECK(classify(r.result) == Classification::general);
}

TEST_CASE("a single white observation in the second urn model is a uniform nested chain") {
    GeneralizedFunctionalModel m = build_urn_gfm2();
    CombinationReport r = observe_one(m, "white");
    CHECK(r.result.focal_count() == 4);
    for (const auto& [set, mass] : r.result.focal()) {
        CHECK(mass == Rational(1, 4));
    }
    CHECK(classify(r.result) == Classification::consonant);
}

TEST_CASE("observing a tally folds the per-outcome evidence") {
    GeneralizedFunctionalModel m = build_urn_gfm2();
    CombinationReport two_white = observe_tally(m, tally(2, 0));

    Hypothesis only4(m.theta(), std::vector<std::int64_t>{4});
    CHECK(two_white.result.focal().at(only4.members()) == Rational(7, 16));
    CHECK(belief(two_white.result, only4) == Rational(7, 16));

    CombinationReport manual = combine(observe_one(m, "white").result,
                                       observe_one(m, "white").result);
    CHECK(two_white.result == manual.result);
    CHECK(two_white.normalization_constant == manual.normalization_constant);
}

TEST_CASE("the cumulative normalization tracks every combination step") {
    GeneralizedFunctionalModel m = build_urn_gfm2();
    CombinationReport r = observe_tally(m, tally(1, 1));
    CombinationReport manual =
        combine(observe_one(m, "white").result, observe_one(m, "black").result);
    CHECK(r.normalization_constant == manual.normalization_constant);
    CHECK(r.conflict_mass == Rational(1) - r.normalization_constant);
    CHECK(r.result == manual.result);
}

TEST_CASE("tally and outcome validation") {
    GeneralizedFunctionalModel m = build_urn_gfm2();
    CHECK_THROWS_AS(observe_tally(m, ObservationTally{}), input_error);
    ObservationTally zero;
    CHECK_THROWS_AS(observe_tally(m, zero), input_error);
    ObservationTally unknown;
    unknown.add("green");
    CHECK_THROWS_AS(observe_tally(m, unknown), input_error);
    CHECK_THROWS_AS(observe_one(m, "green"), input_error);
}

TEST_CASE("an uninformative model yields the vacuous mass function") {
    Frame theta = Frame::integer_range(0, 2);
    GeneralizedFunctionalModel m(theta, {"a", "b"}, {Rational(1, 3), Rational(2, 3)},
                                 {"always"}, {0, 0, 0, 0, 0, 0});
    CombinationReport r = observe_one(m, "always");
    CHECK(r.result == MassFunction::vacuous(theta));
    CHECK(r.conflict_mass.is_zero());
}

TEST_CASE("an outcome no composition can produce is rejected") {
    Frame theta = Frame::integer_range(0, 1);
    GeneralizedFunctionalModel m(theta, {"a", "b"}, {Rational(1, 2), Rational(1, 2)},
                                 {"x", "y", "never"}, {0, 1, 1, 0});
    CHECK_THROWS_AS(observe_one(m, "never"), input_error);
}

TEST_CASE("both urn encodings induce the same outcome distribution") {
    GeneralizedFunctionalModel a = build_urn_gfm1();
    GeneralizedFunctionalModel b = build_urn_gfm2();
    for (std::int64_t theta = 0; theta <= 4; ++theta) {
        auto da = induced_distribution(a, theta);
        auto db = induced_distribution(b, theta);
        CHECK(da == db);
        CHECK(db[1] == Rational(theta, 4));
        CHECK(da[0] + da[1] == Rational(1));
    }
    CHECK_THROWS_AS(induced_distribution(a, 9), input_error);
}

TEST_CASE("likelihood multiplies induced probabilities over the tally") {
    GeneralizedFunctionalModel m = build_urn_gfm2();
    CHECK(likelihood(m, tally(2, 1), 2) == Rational(1, 2).pow(2) * Rational(1, 2));
    CHECK(likelihood(m, tally(2, 1), 4).is_zero());
    CHECK(likelihood(m, tally(2, 1), 0).is_zero());
    auto profile = likelihood_profile(m, tally(2, 0));
    CHECK(profile == std::vector<Rational>{Rational(0), Rational(1, 16), Rational(1, 4),
                                           Rational(9, 16), Rational(1)});
}

TEST_CASE("plausibility of each composition is proportional to its likelihood") {
    GeneralizedFunctionalModel gfm1 = build_urn_gfm1();
    GeneralizedFunctionalModel gfm2 = build_urn_gfm2();

    CHECK(proportionality_constant(gfm1, tally(1, 1)) == Rational(1024, 517));
    CHECK(proportionality_constant(gfm1, tally(2, 1)) == Rational(32768, 9283));
    CHECK(proportionality_constant(gfm1, tally(1, 2)) == Rational(32768, 9283));
    CHECK(proportionality_constant(gfm1, tally(2, 2)) == Rational(1048576, 133441));

    CHECK(proportionality_constant(gfm2, tally(1, 1)) == Rational(8, 3));
    CHECK(proportionality_constant(gfm2, tally(2, 1)) == Rational(32, 7));
    CHECK(proportionality_constant(gfm2, tally(2, 2)) == Rational(128, 13));

    CombinationReport r = observe_tally(gfm1, tally(2, 2));
    CHECK(proportionality_constant(gfm1, tally(2, 2)) ==
          Rational(1) / r.normalization_constant);
}

TEST_CASE("the survival model at four people matches the second urn construction") {
    GeneralizedFunctionalModel survival = SurvivalModel(4).to_gfm();
    GeneralizedFunctionalModel urn = build_urn_gfm2();
    CHECK(survival.theta() == urn.theta());
    CHECK(survival.omega_count() == urn.omega_count());
    for (std::size_t t = 0; t < 5; ++t) {
        for (std::size_t w = 0; w < 4; ++w) {
            CHECK(survival.outcome_at(t, w) == urn.outcome_at(t, w));
        }
    }
}
