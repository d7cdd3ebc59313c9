#pragma once

#include "evw/rational.hpp"

#include <string>

namespace evw {

// A weight of evidence: either an exact nonnegative rational or positive
// infinity (the denominator hypothesis has plausibility zero while the
// numerator's is positive).
class LogWeight {
public:
    explicit LogWeight(Rational exact);
    static LogWeight infinity();

    // numerator_pl / denominator_pl, with the 0-denominator cases resolved:
    // both zero is undefined, denominator-only zero is infinite.
    static LogWeight ratio(const Rational& numerator_pl, const Rational& denominator_pl);

    bool is_infinite() const { return infinite_; }

    // Exact value; throws if infinite.
    const Rational& exact() const;

    // +inf when infinite, -inf when the exact value is zero.
    double log10() const;

    // Exact rational text, or "inf".
    std::string to_string() const;

    friend bool operator==(const LogWeight& a, const LogWeight& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator==(const LogWeight& a, const Rational& b) {
        return !a.infinite_ && a.value_ == b;
    }

private:
    LogWeight() : infinite_(true) {}

    bool infinite_ = false;
    Rational value_;
};

} // namespace evw
