#include "evw/frame.hpp"

#include "evw/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace evw {

Frame::Frame(std::vector<std::int64_t> labels) {
    if (labels.empty()) throw input_error("frame must not be empty");
    auto index = std::make_shared<std::unordered_map<std::int64_t, std::size_t>>();
    index->reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!index->emplace(labels[i], i).second) {
            throw input_error("duplicate frame label " + std::to_string(labels[i]));
        }
    }
    labels_ = std::make_shared<const std::vector<std::int64_t>>(std::move(labels));
    index_ = std::move(index);
}

Frame Frame::integer_range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw input_error("empty frame range");
    std::vector<std::int64_t> labels(static_cast<std::size_t>(hi - lo + 1));
    std::iota(labels.begin(), labels.end(), lo);
    return Frame(std::move(labels));
}

std::optional<std::size_t> Frame::index_of(std::int64_t label) const {
    auto it = index_->find(label);
    if (it == index_->end()) return std::nullopt;
    return it->second;
}

Hypothesis::Hypothesis(Frame frame, const std::vector<std::int64_t>& member_labels)
    : frame_(std::move(frame)), members_(frame_.size()) {
    for (auto label : member_labels) {
        auto idx = frame_.index_of(label);
        if (!idx) throw input_error("label " + std::to_string(label) + " not in frame");
        members_.set(*idx);
    }
}

Hypothesis::Hypothesis(Frame frame, IndexSet members)
    : frame_(std::move(frame)), members_(std::move(members)) {
    if (members_.size() != frame_.size()) throw error("member set size does not match frame");
}

Hypothesis Hypothesis::empty(const Frame& frame) {
    return Hypothesis(frame, IndexSet(frame.size()));
}

Hypothesis Hypothesis::full(const Frame& frame) {
    IndexSet all(frame.size());
    all.set();
    return Hypothesis(frame, std::move(all));
}

bool Hypothesis::contains_label(std::int64_t label) const {
    auto idx = frame_.index_of(label);
    return idx && members_.test(*idx);
}

std::vector<std::int64_t> Hypothesis::member_labels() const {
    std::vector<std::int64_t> out;
    out.reserve(members_.count());
    for (auto i = members_.find_first(); i != IndexSet::npos; i = members_.find_next(i)) {
        out.push_back(frame_.label_at(i));
    }
    return out;
}

Hypothesis Hypothesis::complement() const {
    return Hypothesis(frame_, ~members_);
}

Hypothesis make_interval_hypothesis(const Frame& frame, std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw input_error("interval bounds out of order");
    if (!frame.index_of(lo) || !frame.index_of(hi)) {
        throw input_error("interval bound outside frame");
    }
    IndexSet members(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        auto label = frame.label_at(i);
        if (label >= lo && label <= hi) members.set(i);
    }
    return Hypothesis(frame, std::move(members));
}

Hypothesis make_rate_hypothesis(const Frame& frame, const Rational& rate, RateDirection direction) {
    for (std::size_t i = 0; i < frame.size(); ++i) {
        if (frame.label_at(i) != static_cast<std::int64_t>(i)) {
            throw input_error("rate hypothesis requires a frame of consecutive integers starting at 0");
        }
    }
    if (rate.sign() < 0 || rate > Rational(1)) throw input_error("rate outside [0, 1]");
    auto n = static_cast<std::int64_t>(frame.size()) - 1;
    Rational scaled = rate * Rational(n);
    if (!scaled.is_integer()) {
        throw input_error("rate " + rate.to_string() + " does not align with frame 0.." + std::to_string(n));
    }
    auto threshold = scaled.numerator().convert_to<std::int64_t>();
    if (direction == RateDirection::exactly) {
        return Hypothesis(frame, std::vector<std::int64_t>{threshold});
    }
    return make_interval_hypothesis(frame, threshold, n);
}

} // namespace evw
