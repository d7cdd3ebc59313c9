#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace evw {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational. Always kept in lowest terms with a
// positive denominator, so equality is plain value equality.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long value) : value_(value) {}
    Rational(const BigInt& value) : value_(value) {}
    Rational(const BigInt& numerator, const BigInt& denominator);

    // Accepts "num", "-num" or "num/den" with den > 0. Anything else,
    // including whitespace or a zero denominator, is rejected.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_.sign(); }

    // Raises to an integer power; negative exponents require a nonzero base.
    Rational pow(long long exponent) const;

    // Base-10 logarithm of a positive rational, accurate to well below 1e-9
    // relative error (computed through a 50-digit float).
    double log10_value() const;

    // "num/den", or just "num" when the denominator is 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& other) { value_ += other.value_; return *this; }
    Rational& operator-=(const Rational& other) { value_ -= other.value_; return *this; }
    Rational& operator*=(const Rational& other) { value_ *= other.value_; return *this; }
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    boost::multiprecision::cpp_rational value_;
};

} // namespace evw
