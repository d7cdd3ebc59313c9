#pragma once

#include "evw/gfm.hpp"
#include "evw/log_weight.hpp"
#include "evw/mass_function.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace evw {

// True when the observed outcome favors parameter theta over theta2, i.e. the
// outcome's likelihood ratio exceeds 1. Requires a positive denominator
// likelihood.
bool supports(const GeneralizedFunctionalModel& model, std::string_view outcome_label,
              std::int64_t theta, std::int64_t theta2);

// Weight of evidence between two single parameters: the likelihood ratio of
// the tally. Infinite when only theta2's likelihood vanishes.
LogWeight weight_simple(const GeneralizedFunctionalModel& model, const ObservationTally& tally,
                        std::int64_t theta, std::int64_t theta2);

// Weight of evidence between two hypotheses: ratio of their plausibilities
// under the combined evidence of the tally. Both hypotheses must be nonempty
// subsets of the model's parameter frame.
LogWeight weight(const GeneralizedFunctionalModel& model, const ObservationTally& tally,
                 const Hypothesis& h, const Hypothesis& h2, std::size_t max_focal = kNoFocalLimit);

// Same ratio, taken on an already-combined mass function.
LogWeight weight(const MassFunction& combined, const Hypothesis& h, const Hypothesis& h2);

// Shortcut laws for the two special shapes of evidence, given the singleton
// plausibilities (indexed like the hypothesis frame, any common positive
// scaling allowed since it cancels).
//
// precise: plausibility of a set is the sum over its members.
LogWeight weight_precise(const std::vector<Rational>& singleton_plausibilities,
                         const Hypothesis& h, const Hypothesis& h2);
// consonant: plausibility of a set is the max over its members.
LogWeight weight_consonant(const std::vector<Rational>& singleton_plausibilities,
                           const Hypothesis& h, const Hypothesis& h2);

// The number of consecutive white draws from a two-ball urn (one white, one
// black, drawn with replacement) whose weight for "both balls white" against
// "one of each" would be closest to w on the log2 scale; ties round down.
// Only defined for finite w > 1.
std::int64_t interpret_as_urn_draws(const LogWeight& w);

} // namespace evw
