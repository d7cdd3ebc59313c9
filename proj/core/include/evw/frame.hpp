#pragma once

#include "evw/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

namespace evw {

// A subset of frame elements, one bit per frame index.
using IndexSet = boost::dynamic_bitset<>;

// Finite frame of discernment: an ordered list of distinct integer labels.
// Cheap to copy; two frames compare equal when their label lists match.
class Frame {
public:
    explicit Frame(std::vector<std::int64_t> labels);

    // Frame with labels lo, lo+1, ..., hi.
    static Frame integer_range(std::int64_t lo, std::int64_t hi);

    std::size_t size() const { return labels_->size(); }
    const std::vector<std::int64_t>& labels() const { return *labels_; }
    std::int64_t label_at(std::size_t index) const { return (*labels_)[index]; }
    std::optional<std::size_t> index_of(std::int64_t label) const;

    friend bool operator==(const Frame& a, const Frame& b) {
        return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
    }
    friend bool operator!=(const Frame& a, const Frame& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::int64_t>> labels_;
    std::shared_ptr<const std::unordered_map<std::int64_t, std::size_t>> index_;
};

// A subset of a frame, tied to that frame.
class Hypothesis {
public:
    Hypothesis(Frame frame, const std::vector<std::int64_t>& member_labels);
    Hypothesis(Frame frame, IndexSet members);

    static Hypothesis empty(const Frame& frame);
    static Hypothesis full(const Frame& frame);

    const Frame& frame() const { return frame_; }
    const IndexSet& members() const { return members_; }
    std::size_t count() const { return members_.count(); }
    bool is_empty() const { return members_.none(); }
    bool is_simple() const { return members_.count() == 1; }
    bool is_composite() const { return members_.count() > 1; }
    bool contains_label(std::int64_t label) const;
    std::vector<std::int64_t> member_labels() const;

    Hypothesis complement() const;

    friend bool operator==(const Hypothesis& a, const Hypothesis& b) {
        return a.frame_ == b.frame_ && a.members_ == b.members_;
    }
    friend bool operator!=(const Hypothesis& a, const Hypothesis& b) { return !(a == b); }

private:
    Frame frame_;
    IndexSet members_;
};

// All frame elements with labels in [lo, hi]. Both bounds must be frame labels.
Hypothesis make_interval_hypothesis(const Frame& frame, std::int64_t lo, std::int64_t hi);

enum class RateDirection { at_least, exactly };

// For a frame of consecutive integers 0..N, the hypothesis that the unknown
// count, as a fraction of N, is at least (or exactly) the given rate.
// rate*N must land on an integer.
Hypothesis make_rate_hypothesis(const Frame& frame, const Rational& rate, RateDirection direction);

} // namespace evw
