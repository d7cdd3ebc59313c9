#include <doctest.h>

#include <evw/error.hpp>
#include <evw/mass_function.hpp>

#include <vector>

using namespace evw;

namespace {

IndexSet bits(std::size_t size, unsigned long value) { return IndexSet(size, value); }

MassFunction example() {
    Frame f = Frame::integer_range(0, 2);
    return MassFunction::from_focals(f, {{bits(3, 0b001), Rational(1, 2)},
                                         {bits(3, 0b011), Rational(1, 3)},
                                         {bits(3, 0b111), Rational(1, 6)}});
}

} // namespace

TEST_CASE("construction validates masses") {
    Frame f = Frame::integer_range(0, 2);
    CHECK_THROWS_AS(MassFunction(f, {}), error);
    CHECK_THROWS_AS(MassFunction::from_focals(f, {{bits(3, 0), Rational(1)}}), error);
    CHECK_THROWS_AS(MassFunction::from_focals(f, {{bits(3, 1), Rational(1, 2)}}), error);
    CHECK_THROWS_AS(MassFunction::from_focals(f, {{bits(3, 1), Rational(3, 2)},
                                                  {bits(3, 2), Rational(-1, 2)}}),
                    error);
}

TEST_CASE("duplicate focal sets merge") {
    Frame f = Frame::integer_range(0, 2);
    MassFunction m = MassFunction::from_focals(f, {{bits(3, 0b011), Rational(1, 4)},
                                                   {bits(3, 0b011), Rational(1, 4)},
                                                   {bits(3, 0b100), Rational(1, 2)}});
    CHECK(m.focal_count() == 2);
    CHECK(m.focal().at(bits(3, 0b011)) == Rational(1, 2));
}

TEST_CASE("belief counts contained sets and plausibility counts intersecting ones") {
    MassFunction m = example();
    Frame f = m.frame();
    Hypothesis h01(f, std::vector<std::int64_t>{0, 1});
    CHECK(belief(m, h01) == Rational(5, 6));
    CHECK(plausibility(m, h01) == Rational(1));
    Hypothesis h2(f, std::vector<std::int64_t>{2});
    CHECK(belief(m, h2) == Rational(0));
    CHECK(plausibility(m, h2) == Rational(1, 6));
    CHECK(belief(m, Hypothesis::full(f)) == Rational(1));
    CHECK(plausibility(m, Hypothesis::empty(f)) == Rational(0));
    CHECK(plausibility(m, h01) == Rational(1) - belief(m, h01.complement()));
}

TEST_CASE("belief rejects a hypothesis over a different frame") {
    MassFunction m = example();
    Frame other = Frame::integer_range(0, 3);
    CHECK_THROWS_AS(belief(m, Hypothesis::full(other)), input_error);
}

TEST_CASE("classification separates precise, consonant, and general") {
    Frame f = Frame::integer_range(0, 2);
    MassFunction precise = MassFunction::from_focals(
        f, {{bits(3, 0b001), Rational(1, 2)}, {bits(3, 0b100), Rational(1, 2)}});
    CHECK(classify(precise) == Classification::precise);
    CHECK(classify(example()) == Classification::consonant);
    MassFunction general = MassFunction::from_focals(
        f, {{bits(3, 0b011), Rational(1, 2)}, {bits(3, 0b110), Rational(1, 2)}});
    CHECK(classify(general) == Classification::general);
    CHECK(classify(MassFunction::vacuous(f)) == Classification::consonant);
    CHECK(to_string(Classification::general) == "general");
}

TEST_CASE("combination multiplies masses over intersections and renormalizes") {
    Frame f = Frame::integer_range(0, 1);
    MassFunction a = MassFunction::from_focals(
        f, {{bits(2, 0b01), Rational(2, 3)}, {bits(2, 0b11), Rational(1, 3)}});
    MassFunction b = MassFunction::from_focals(
        f, {{bits(2, 0b10), Rational(1, 2)}, {bits(2, 0b11), Rational(1, 2)}});
    CombinationReport r = combine(a, b);
    CHECK(r.conflict_mass == Rational(1, 3));
    CHECK(r.normalization_constant == Rational(2, 3));
    CHECK(r.result.focal().at(bits(2, 0b01)) == Rational(1, 2));
    CHECK(r.result.focal().at(bits(2, 0b10)) == Rational(1, 4));
    CHECK(r.result.focal().at(bits(2, 0b11)) == Rational(1, 4));

    CombinationReport swapped = combine(b, a);
    CHECK(swapped.result == r.result);
    CHECK(swapped.conflict_mass == r.conflict_mass);
}

TEST_CASE("the vacuous mass function is the combination identity") {
    MassFunction m = example();
    CombinationReport r = combine(m, MassFunction::vacuous(m.frame()));
    CHECK(r.result == m);
    CHECK(r.conflict_mass.is_zero());
}

TEST_CASE("total conflict is reported as undefined") {
    Frame f = Frame::integer_range(0, 1);
    MassFunction a = MassFunction::from_focals(f, {{bits(2, 0b01), Rational(1)}});
    MassFunction b = MassFunction::from_focals(f, {{bits(2, 0b10), Rational(1)}});
    CHECK_THROWS_AS(combine(a, b), undefined_error);
}

TEST_CASE("frame mismatch in combination is an input error") {
    Frame f = Frame::integer_range(0, 1);
    Frame g = Frame::integer_range(0, 2);
    CHECK_THROWS_AS(combine(MassFunction::vacuous(f), MassFunction::vacuous(g)), input_error);
}

TEST_CASE("the focal limit aborts oversized combinations") {
    Frame f = Frame::integer_range(0, 2);
    MassFunction a = MassFunction::from_focals(
        f, {{bits(3, 0b011), Rational(1, 2)}, {bits(3, 0b110), Rational(1, 2)}});
    MassFunction b = MassFunction::from_focals(
        f, {{bits(3, 0b101), Rational(1, 2)}, {bits(3, 0b111), Rational(1, 2)}});
    CHECK_THROWS_AS(combine(a, b, 1), focal_limit_error);
    CHECK_NOTHROW(combine(a, b, 4));
}

TEST_CASE("combine_power folds repeated independent observations") {
    Frame f = Frame::integer_range(0, 1);
    MassFunction a = MassFunction::from_focals(
        f, {{bits(2, 0b01), Rational(2, 3)}, {bits(2, 0b11), Rational(1, 3)}});
    CHECK_THROWS_AS(combine_power(a, 0), input_error);

    CombinationReport once = combine_power(a, 1);
    CHECK(once.result == a);
    CHECK(once.normalization_constant == Rational(1));
    CHECK(once.conflict_mass.is_zero());

    CombinationReport twice = combine_power(a, 2);
    CHECK(twice.result == combine(a, a).result);

    MassFunction b = MassFunction::from_focals(
        f, {{bits(2, 0b01), Rational(1, 2)}, {bits(2, 0b10), Rational(1, 2)}});
    CombinationReport b2 = combine_power(b, 2);
    CHECK(b2.normalization_constant == Rational(1, 2));
    CHECK(b2.conflict_mass == Rational(1, 2));

    CombinationReport b3 = combine_power(b, 3);
    CHECK(b3.normalization_constant == Rational(1, 2) * Rational(1, 2));
    CHECK(b3.conflict_mass == Rational(3, 4));
}
