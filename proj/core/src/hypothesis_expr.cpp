#include "evw/hypothesis_expr.hpp"

#include "evw/error.hpp"

#include <charconv>
#include <vector>

namespace evw {

namespace {

std::string_view trim(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    return text;
}

std::int64_t parse_label(std::string_view text, std::string_view whole) {
    text = trim(text);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw input_error("invalid hypothesis expression '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

std::optional<RateExpr> parse_rate_expression(std::string_view text) {
    RateDirection direction;
    std::string_view body;
    if (text.starts_with(">=")) {
        direction = RateDirection::at_least;
        body = text.substr(2);
    } else if (text.starts_with('=')) {
        direction = RateDirection::exactly;
        body = text.substr(1);
    } else {
        return std::nullopt;
    }
    return RateExpr{Rational::parse(body), direction};
}

Hypothesis parse_hypothesis(std::string_view text, const Frame& frame) {
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
        std::string_view body = text.substr(1, text.size() - 2);
        if (body.empty()) throw input_error("invalid hypothesis expression '" + std::string(text) + "'");
        std::vector<std::int64_t> labels;
        while (true) {
            auto comma = body.find(',');
            labels.push_back(parse_label(body.substr(0, comma), text));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        return Hypothesis(frame, labels);
    }
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
        std::string_view body = text.substr(1, text.size() - 2);
        auto dots = body.find("..");
        if (dots == std::string_view::npos) {
            throw input_error("invalid hypothesis expression '" + std::string(text) + "'");
        }
        std::int64_t lo = parse_label(body.substr(0, dots), text);
        std::int64_t hi = parse_label(body.substr(dots + 2), text);
        return make_interval_hypothesis(frame, lo, hi);
    }
    if (auto rate = parse_rate_expression(text)) {
        return make_rate_hypothesis(frame, rate->rate, rate->direction);
    }
    throw input_error("invalid hypothesis expression '" + std::string(text) + "'");
}

std::string format_index_set(const IndexSet& members, const Frame& frame) {
    std::vector<std::int64_t> labels;
    labels.reserve(members.count());
    for (auto i = members.find_first(); i != IndexSet::npos; i = members.find_next(i)) {
        labels.push_back(frame.label_at(i));
    }
    if (labels.size() >= 2) {
        bool contiguous = true;
        for (std::size_t i = 1; i < labels.size(); ++i) {
            if (labels[i] != labels[i - 1] + 1) {
                contiguous = false;
                break;
            }
        }
        if (contiguous) {
            return "[" + std::to_string(labels.front()) + ".." + std::to_string(labels.back()) + "]";
        }
    }
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(labels[i]);
    }
    out += "}";
    return out;
}

std::string format_hypothesis(const Hypothesis& h) {
    return format_index_set(h.members(), h.frame());
}

} // namespace evw
