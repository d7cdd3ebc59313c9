#pragma once

#include "evw/frame.hpp"
#include "evw/rational.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <string_view>

namespace evw {

inline constexpr std::size_t kNoFocalLimit = std::numeric_limits<std::size_t>::max();

// A basic probability assignment over a frame: positive rational masses on
// nonempty subsets (the focal sets), summing exactly to 1.
class MassFunction {
public:
    using FocalMap = std::map<IndexSet, Rational>;

    // Validates every invariant; duplicate keys are impossible in a map, so
    // callers with possibly-repeated sets should go through from_focals.
    MassFunction(Frame frame, FocalMap focal);

    // Merges equal sets by summing before validating.
    static MassFunction from_focals(Frame frame, const std::vector<std::pair<IndexSet, Rational>>& focals);

    // The whole frame carries mass 1: total ignorance.
    static MassFunction vacuous(Frame frame);

    const Frame& frame() const { return frame_; }
    const FocalMap& focal() const { return focal_; }
    std::size_t focal_count() const { return focal_.size(); }

    friend bool operator==(const MassFunction& a, const MassFunction& b) {
        return a.frame_ == b.frame_ && a.focal_ == b.focal_;
    }
    friend bool operator!=(const MassFunction& a, const MassFunction& b) { return !(a == b); }

private:
    Frame frame_;
    FocalMap focal_;
};

// Sum of masses of focal sets contained in the hypothesis.
Rational belief(const MassFunction& m, const Hypothesis& h);

// Sum of masses of focal sets that intersect the hypothesis.
Rational plausibility(const MassFunction& m, const Hypothesis& h);

enum class Classification { consonant, precise, general };

std::string_view to_string(Classification c);

// precise: every focal set is a singleton. consonant: the focal sets form a
// nested chain. A single-singleton mass function counts as precise.
Classification classify(const MassFunction& m);

struct CombinationReport {
    MassFunction result;
    Rational conflict_mass;            // product mass discarded on empty intersections
    Rational normalization_constant;   // 1 - conflict_mass
};

// Dempster's rule: intersect focal sets pairwise, multiply masses, drop the
// empty intersections and renormalize. Total conflict is an error. If the
// accumulated focal-set count ever exceeds max_focal, gives up with a
// focal_limit_error.
CombinationReport combine(const MassFunction& a, const MassFunction& b,
                          std::size_t max_focal = kNoFocalLimit);

// m combined with itself k times (k >= 1) by left fold. The report's
// normalization constant is the product over all steps, so conflict_mass is
// the total product-space mass discarded along the way.
CombinationReport combine_power(const MassFunction& m, std::uint64_t k,
                                std::size_t max_focal = kNoFocalLimit);

} // namespace evw
