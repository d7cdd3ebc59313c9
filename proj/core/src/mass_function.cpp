#include "evw/mass_function.hpp"

#include "evw/error.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace evw {

MassFunction::MassFunction(Frame frame, FocalMap focal)
    : frame_(std::move(frame)), focal_(std::move(focal)) {
    if (focal_.empty()) throw error("mass function needs at least one focal set");
    Rational total;
    for (const auto& [set, mass] : focal_) {
        if (set.size() != frame_.size()) throw error("focal set size does not match frame");
        if (set.none()) throw error("empty focal set");
        if (mass.sign() <= 0) throw error("focal mass must be positive");
        total += mass;
    }
    if (total != Rational(1)) {
        throw error("focal masses sum to " + total.to_string() + ", expected 1");
    }
}

MassFunction MassFunction::from_focals(Frame frame,
                                       const std::vector<std::pair<IndexSet, Rational>>& focals) {
    FocalMap map;
    for (const auto& [set, mass] : focals) {
        auto [it, inserted] = map.emplace(set, mass);
        if (!inserted) it->second += mass;
    }
    return MassFunction(std::move(frame), std::move(map));
}

MassFunction MassFunction::vacuous(Frame frame) {
    IndexSet all(frame.size());
    all.set();
    FocalMap map;
    map.emplace(std::move(all), Rational(1));
    return MassFunction(std::move(frame), std::move(map));
}

Rational belief(const MassFunction& m, const Hypothesis& h) {
    if (m.frame() != h.frame()) throw input_error("hypothesis frame does not match mass function");
    Rational sum;
    for (const auto& [set, mass] : m.focal()) {
        if (set.is_subset_of(h.members())) sum += mass;
    }
    return sum;
}

Rational plausibility(const MassFunction& m, const Hypothesis& h) {
    if (m.frame() != h.frame()) throw input_error("hypothesis frame does not match mass function");
    Rational sum;
    for (const auto& [set, mass] : m.focal()) {
        if (set.intersects(h.members())) sum += mass;
    }
    return sum;
}

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::consonant: return "consonant";
        case Classification::precise: return "precise";
        case Classification::general: return "general";
    }
    return "general";
}

Classification classify(const MassFunction& m) {
    bool all_singletons = true;
    for (const auto& [set, mass] : m.focal()) {
        if (set.count() != 1) {
            all_singletons = false;
            break;
        }
    }
    if (all_singletons) return Classification::precise;

    std::vector<const IndexSet*> sets;
    sets.reserve(m.focal_count());
    for (const auto& [set, mass] : m.focal()) sets.push_back(&set);
    std::sort(sets.begin(), sets.end(),
              [](const IndexSet* a, const IndexSet* b) { return a->count() < b->count(); });
    for (std::size_t i = 1; i < sets.size(); ++i) {
        if (!sets[i - 1]->is_subset_of(*sets[i])) return Classification::general;
    }
    return Classification::consonant;
}

CombinationReport combine(const MassFunction& a, const MassFunction& b, std::size_t max_focal) {
    if (a.frame() != b.frame()) throw input_error("cannot combine mass functions over different frames");
    MassFunction::FocalMap acc;
    Rational conflict;
    for (const auto& [fa, ma] : a.focal()) {
        for (const auto& [fb, mb] : b.focal()) {
            IndexSet meet = fa & fb;
            Rational product = ma * mb;
            if (meet.none()) {
                conflict += product;
                continue;
            }
            auto [it, inserted] = acc.emplace(std::move(meet), product);
            if (!inserted) {
                it->second += product;
            } else if (acc.size() > max_focal) {
                throw focal_limit_error("combination exceeds focal-set limit of " + std::to_string(max_focal));
            }
        }
    }
    Rational normalization = Rational(1) - conflict;
    if (normalization.is_zero()) throw undefined_error("incompatible evidence: total conflict");
    for (auto& [set, mass] : acc) mass /= normalization;
    return CombinationReport{MassFunction(a.frame(), std::move(acc)), std::move(conflict),
                             std::move(normalization)};
}

CombinationReport combine_power(const MassFunction& m, std::uint64_t k, std::size_t max_focal) {
    if (k == 0) throw input_error("combination power must be at least 1");
    CombinationReport report{m, Rational(0), Rational(1)};
    for (std::uint64_t step = 1; step < k; ++step) {
        CombinationReport next = combine(report.result, m, max_focal);
        report.result = std::move(next.result);
        report.normalization_constant *= next.normalization_constant;
    }
    report.conflict_mass = Rational(1) - report.normalization_constant;
    return report;
}

} // namespace evw
