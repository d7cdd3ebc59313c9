#include "evw/evidence.hpp"

#include "evw/error.hpp"

#include <string>

namespace evw {

namespace {

void check_hypothesis_pair(const Frame& frame, const Hypothesis& h, const Hypothesis& h2) {
    if (h.frame() != frame || h2.frame() != frame) {
        throw input_error("hypothesis frame does not match the evidence frame");
    }
    if (h.is_empty() || h2.is_empty()) throw input_error("hypotheses must be nonempty");
}

void check_profile(const std::vector<Rational>& singleton_plausibilities, const Hypothesis& h) {
    if (singleton_plausibilities.size() != h.frame().size()) {
        throw input_error("plausibility profile does not match the hypothesis frame");
    }
    for (const auto& pl : singleton_plausibilities) {
        if (pl.sign() < 0) throw input_error("negative plausibility in profile");
    }
}

} // namespace

bool supports(const GeneralizedFunctionalModel& model, std::string_view outcome_label,
              std::int64_t theta, std::int64_t theta2) {
    auto x = model.outcome_index(outcome_label);
    if (!x) throw input_error("unknown outcome label '" + std::string(outcome_label) + "'");
    Rational l1 = induced_distribution(model, theta)[*x];
    Rational l2 = induced_distribution(model, theta2)[*x];
    if (l2.is_zero()) throw undefined_error("undefined support ratio: reference likelihood is zero");
    return l1 > l2;
}

LogWeight weight_simple(const GeneralizedFunctionalModel& model, const ObservationTally& tally,
                        std::int64_t theta, std::int64_t theta2) {
    Rational l1 = likelihood(model, tally, theta);
    Rational l2 = likelihood(model, tally, theta2);
    return LogWeight::ratio(l1, l2);
}

LogWeight weight(const GeneralizedFunctionalModel& model, const ObservationTally& tally,
                 const Hypothesis& h, const Hypothesis& h2, std::size_t max_focal) {
    check_hypothesis_pair(model.theta(), h, h2);
    CombinationReport report = observe_tally(model, tally, max_focal);
    return weight(report.result, h, h2);
}

LogWeight weight(const MassFunction& combined, const Hypothesis& h, const Hypothesis& h2) {
    check_hypothesis_pair(combined.frame(), h, h2);
    return LogWeight::ratio(plausibility(combined, h), plausibility(combined, h2));
}

LogWeight weight_precise(const std::vector<Rational>& singleton_plausibilities,
                         const Hypothesis& h, const Hypothesis& h2) {
    check_hypothesis_pair(h.frame(), h, h2);
    check_profile(singleton_plausibilities, h);
    auto sum_over = [&](const Hypothesis& hyp) {
        Rational sum;
        const IndexSet& members = hyp.members();
        for (auto i = members.find_first(); i != IndexSet::npos; i = members.find_next(i)) {
            sum += singleton_plausibilities[i];
        }
        return sum;
    };
    return LogWeight::ratio(sum_over(h), sum_over(h2));
}

LogWeight weight_consonant(const std::vector<Rational>& singleton_plausibilities,
                           const Hypothesis& h, const Hypothesis& h2) {
    check_hypothesis_pair(h.frame(), h, h2);
    check_profile(singleton_plausibilities, h);
    auto max_over = [&](const Hypothesis& hyp) {
        Rational best;
        const IndexSet& members = hyp.members();
        for (auto i = members.find_first(); i != IndexSet::npos; i = members.find_next(i)) {
            if (singleton_plausibilities[i] > best) best = singleton_plausibilities[i];
        }
        return best;
    };
    return LogWeight::ratio(max_over(h), max_over(h2));
}

std::int64_t interpret_as_urn_draws(const LogWeight& w) {
    if (w.is_infinite()) throw undefined_error("no supporting interpretation for an infinite weight");
    const Rational& value = w.exact();
    if (value <= Rational(1)) {
        throw undefined_error("no supporting interpretation for weight " + value.to_string());
    }
    BigInt num = value.numerator();
    BigInt den = value.denominator();

    // floor(log2(num/den)), seeded by bit lengths and then corrected.
    auto fits = [&](std::int64_t k) { return (den << static_cast<unsigned>(k)) <= num; };
    std::int64_t k = static_cast<std::int64_t>(boost::multiprecision::msb(num)) -
                     static_cast<std::int64_t>(boost::multiprecision::msb(den));
    if (k < 0) k = 0;
    while (!fits(k)) --k;
    while (fits(k + 1)) ++k;

    // Round log2 to the nearest integer: k+1 wins exactly when
    // value^2 > 2^(2k+1). Ties go down (can't happen for rational values,
    // since 2^(k+1/2) is irrational, but the comparison is cheap).
    BigInt lhs = num * num;
    BigInt rhs = (den * den) << static_cast<unsigned>(2 * k + 1);
    return lhs <= rhs ? k : k + 1;
}

} // namespace evw
