#include <doctest.h>

#include <evw/error.hpp>
#include <evw/rational.hpp>

#include <cmath>
#include <sstream>

using evw::BigInt;
using evw::Rational;

TEST_CASE("parsing accepts integers and fractions") {
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("3/32") == Rational(3, 32));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
}

TEST_CASE("parsing rejects anything outside the grammar") {
    for (const char* bad : {"", "-", "3/", "/4", "1.5", "+2", "3 /4", "0x10", "2/-3"}) {
        CHECK_THROWS_AS(Rational::parse(bad), evw::input_error);
    }
    CHECK_THROWS_AS(Rational::parse("3/0"), evw::input_error);
}

TEST_CASE("values are kept in lowest terms with the sign on top") {
    CHECK(Rational(-6, 8).to_string() == "-3/4");
    CHECK(Rational(6, -8) == Rational(-3, 4));
    CHECK(Rational(-6, -8) == Rational(3, 4));
    CHECK(Rational(0, 97).to_string() == "0");
    CHECK(Rational(12, 4).to_string() == "3");
}

TEST_CASE("construction with a zero denominator is an input error") {
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), evw::input_error);
}

TEST_CASE("arithmetic matches hand computation") {
    Rational a(1, 6);
    Rational b(3, 4);
    CHECK(a + b == Rational(11, 12));
    CHECK(a - b == Rational(-7, 12));
    CHECK(a * b == Rational(1, 8));
    CHECK(a / b == Rational(2, 9));
    CHECK_THROWS_AS(a / Rational(0), evw::error);
    CHECK(a < b);
    CHECK(b > a);
    CHECK(a != b);
    CHECK(-a == Rational(-1, 6));
}

TEST_CASE("pow handles positive, zero, and negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(0) == Rational(1));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(0).pow(5) == Rational(0));
    CHECK_THROWS_AS(Rational(0).pow(-1), evw::error);
}

TEST_CASE("log10 is accurate for large and small values") {
    CHECK(Rational(1000).log10_value() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(Rational(1, 8).log10_value() == doctest::Approx(-3 * std::log10(2.0)).epsilon(1e-12));
    BigInt big = boost::multiprecision::pow(BigInt(2), 300);
    CHECK(Rational(big).log10_value() == doctest::Approx(300 * std::log10(2.0)).epsilon(1e-9));
    CHECK_THROWS_AS(Rational(0).log10_value(), evw::error);
    CHECK_THROWS_AS(Rational(-2).log10_value(), evw::error);
}

TEST_CASE("printing round-trips and streams without a denominator of one") {
    Rational q(9283, 32768);
    CHECK(Rational::parse(q.to_string()) == q);
    std::ostringstream out;
    out << Rational(5) << " " << Rational(5, 2);
    CHECK(out.str() == "5 5/2");
}

TEST_CASE("predicates report sign, zero, and integrality") {
    CHECK(Rational(0).is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(3, 7).sign() == 1);
    CHECK(Rational(0).sign() == 0);
}
