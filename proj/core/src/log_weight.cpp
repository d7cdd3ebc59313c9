#include "evw/log_weight.hpp"

#include "evw/error.hpp"

#include <limits>

namespace evw {

LogWeight::LogWeight(Rational exact) : value_(std::move(exact)) {
    if (value_.sign() < 0) throw error("negative weight");
}

LogWeight LogWeight::infinity() {
    return LogWeight();
}

LogWeight LogWeight::ratio(const Rational& numerator_pl, const Rational& denominator_pl) {
    if (numerator_pl.sign() < 0 || denominator_pl.sign() < 0) {
        throw error("negative plausibility in weight ratio");
    }
    if (denominator_pl.is_zero()) {
        if (numerator_pl.is_zero()) throw undefined_error("weight undefined: both hypotheses have zero plausibility");
        return infinity();
    }
    return LogWeight(numerator_pl / denominator_pl);
}

const Rational& LogWeight::exact() const {
    if (infinite_) throw error("infinite weight has no exact value");
    return value_;
}

double LogWeight::log10() const {
    if (infinite_) return std::numeric_limits<double>::infinity();
    if (value_.is_zero()) return -std::numeric_limits<double>::infinity();
    return value_.log10_value();
}

std::string LogWeight::to_string() const {
    return infinite_ ? "inf" : value_.to_string();
}

} // namespace evw
