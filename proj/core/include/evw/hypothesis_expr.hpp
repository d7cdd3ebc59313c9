#pragma once

#include "evw/frame.hpp"
#include "evw/rational.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace evw {

// Hypothesis expressions, exactly one of:
//   {a,b,...}   explicit labels
//   [lo..hi]    every label in the range
//   >=p/q       rate at least p/q (frame must be 0..N with N*p/q integral)
//   =p/q        rate exactly p/q
Hypothesis parse_hypothesis(std::string_view text, const Frame& frame);

struct RateExpr {
    Rational rate;
    RateDirection direction;
};

// The two rate forms only; nullopt for anything else.
std::optional<RateExpr> parse_rate_expression(std::string_view text);

// Renders a set of frame elements; a contiguous stretch of consecutive
// integer labels of size >= 2 prints as [lo..hi], everything else as {...}.
std::string format_index_set(const IndexSet& members, const Frame& frame);

std::string format_hypothesis(const Hypothesis& h);

} // namespace evw
