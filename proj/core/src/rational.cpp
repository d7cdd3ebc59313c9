#include "evw/rational.hpp"

#include "evw/error.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

namespace evw {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator.is_zero()) throw input_error("rational with zero denominator");
    if (denominator < 0) {
        value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
    } else {
        value_ = boost::multiprecision::cpp_rational(numerator, denominator);
    }
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num_part = body;
    std::string_view den_part;
    bool has_den = false;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num_part) || (has_den && !all_digits(den_part))) {
        throw input_error("malformed rational '" + std::string(text) + "'");
    }
    BigInt num{std::string(num_part)};
    BigInt den = has_den ? BigInt{std::string(den_part)} : BigInt(1);
    if (den.is_zero()) throw input_error("malformed rational '" + std::string(text) + "': zero denominator");
    if (negative) num = -num;
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.value_.is_zero()) throw error("rational division by zero");
    value_ /= other.value_;
    return *this;
}

Rational Rational::pow(long long exponent) const {
    if (exponent == 0) return Rational(1);
    if (value_.is_zero() && exponent < 0) throw error("zero raised to a negative power");
    bool invert = exponent < 0;
    auto e = static_cast<unsigned long long>(invert ? -exponent : exponent);
    if (e > std::numeric_limits<unsigned>::max()) throw error("exponent too large");
    BigInt n = boost::multiprecision::pow(numerator(), static_cast<unsigned>(e));
    BigInt d = boost::multiprecision::pow(denominator(), static_cast<unsigned>(e));
    return invert ? Rational(d, n) : Rational(n, d);
}

double Rational::log10_value() const {
    if (sign() <= 0) throw error("log10 of a non-positive rational");
    using Float50 = boost::multiprecision::cpp_bin_float_50;
    Float50 f(value_);
    return boost::multiprecision::log10(f).convert_to<double>();
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << value_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.value_;
}

} // namespace evw
