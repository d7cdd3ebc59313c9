#include "evw/gfm.hpp"

#include "evw/error.hpp"

#include <limits>
#include <string>
#include <utility>

namespace evw {

GeneralizedFunctionalModel::GeneralizedFunctionalModel(Frame theta,
                                                       std::vector<std::string> omega_labels,
                                                       std::vector<Rational> omega_probabilities,
                                                       std::vector<std::string> outcome_labels,
                                                       std::vector<std::size_t> f_table)
    : theta_(std::move(theta)),
      omega_labels_(std::move(omega_labels)),
      omega_probabilities_(std::move(omega_probabilities)),
      outcome_labels_(std::move(outcome_labels)),
      f_table_(std::move(f_table)) {
    if (omega_labels_.empty()) throw input_error("model needs at least one disturbance");
    if (outcome_labels_.empty()) throw input_error("model needs at least one outcome");
    if (omega_probabilities_.size() != omega_labels_.size()) {
        throw input_error("disturbance probabilities do not match disturbance labels");
    }
    Rational total;
    for (const auto& p : omega_probabilities_) {
        if (p.sign() <= 0) throw input_error("disturbance probabilities must be positive");
        total += p;
    }
    if (total != Rational(1)) {
        throw input_error("disturbance probabilities sum to " + total.to_string() + ", expected 1");
    }
    if (f_table_.size() != theta_.size() * omega_labels_.size()) {
        throw input_error("function table does not cover every (theta, omega) pair");
    }
    for (auto outcome : f_table_) {
        if (outcome >= outcome_labels_.size()) throw input_error("function table refers to unknown outcome");
    }
    for (std::size_t i = 0; i < omega_labels_.size(); ++i) {
        for (std::size_t j = i + 1; j < omega_labels_.size(); ++j) {
            if (omega_labels_[i] == omega_labels_[j]) {
                throw input_error("duplicate disturbance label '" + omega_labels_[i] + "'");
            }
        }
    }
    for (std::size_t i = 0; i < outcome_labels_.size(); ++i) {
        for (std::size_t j = i + 1; j < outcome_labels_.size(); ++j) {
            if (outcome_labels_[i] == outcome_labels_[j]) {
                throw input_error("duplicate outcome label '" + outcome_labels_[i] + "'");
            }
        }
    }
}

std::optional<std::size_t> GeneralizedFunctionalModel::outcome_index(std::string_view label) const {
    for (std::size_t i = 0; i < outcome_labels_.size(); ++i) {
        if (outcome_labels_[i] == label) return i;
    }
    return std::nullopt;
}

bool operator==(const GeneralizedFunctionalModel& a, const GeneralizedFunctionalModel& b) {
    return a.theta_ == b.theta_ && a.omega_labels_ == b.omega_labels_ &&
           a.omega_probabilities_ == b.omega_probabilities_ &&
           a.outcome_labels_ == b.outcome_labels_ && a.f_table_ == b.f_table_;
}

ObservationTally::ObservationTally(std::map<std::string, std::uint64_t> counts)
    : counts_(std::move(counts)) {}

void ObservationTally::add(const std::string& outcome_label, std::uint64_t count) {
    counts_[outcome_label] += count;
}

std::uint64_t ObservationTally::total() const {
    std::uint64_t sum = 0;
    for (const auto& [label, count] : counts_) sum += count;
    return sum;
}

namespace {

void check_tally(const GeneralizedFunctionalModel& model, const ObservationTally& tally) {
    if (tally.total() == 0) throw input_error("empty observation tally");
    for (const auto& [label, count] : tally.counts()) {
        if (count > 0 && !model.outcome_index(label)) {
            throw input_error("unknown outcome label '" + label + "'");
        }
    }
}

} // namespace

CombinationReport observe_one(const GeneralizedFunctionalModel& model, std::string_view outcome_label) {
    auto x = model.outcome_index(outcome_label);
    if (!x) throw input_error("unknown outcome label '" + std::string(outcome_label) + "'");

    MassFunction::FocalMap focal;
    Rational dead;
    const std::size_t theta_count = model.theta().size();
    for (std::size_t w = 0; w < model.omega_count(); ++w) {
        IndexSet compatible(theta_count);
        for (std::size_t t = 0; t < theta_count; ++t) {
            if (model.outcome_at(t, w) == *x) compatible.set(t);
        }
        if (compatible.none()) {
            dead += model.omega_probability(w);
            continue;
        }
        auto [it, inserted] = focal.emplace(std::move(compatible), model.omega_probability(w));
        if (!inserted) it->second += model.omega_probability(w);
    }
    if (focal.empty()) {
        throw input_error("outcome '" + std::string(outcome_label) + "' is impossible under the model");
    }
    Rational normalization = Rational(1) - dead;
    for (auto& [set, mass] : focal) mass /= normalization;
    return CombinationReport{MassFunction(model.theta(), std::move(focal)), std::move(dead),
                             std::move(normalization)};
}

CombinationReport observe_tally(const GeneralizedFunctionalModel& model, const ObservationTally& tally,
                                std::size_t max_focal) {
    check_tally(model, tally);
    Rational normalization(1);
    std::optional<MassFunction> result;
    for (const auto& [label, count] : tally.counts()) {
        if (count == 0) continue;
        if (count > static_cast<std::uint64_t>(std::numeric_limits<long long>::max())) {
            throw input_error("tally count too large");
        }
        CombinationReport single = observe_one(model, label);
        normalization *= single.normalization_constant.pow(static_cast<long long>(count));
        CombinationReport repeated = combine_power(single.result, count, max_focal);
        normalization *= repeated.normalization_constant;
        if (!result) {
            result = std::move(repeated.result);
        } else {
            CombinationReport merged = combine(*result, repeated.result, max_focal);
            normalization *= merged.normalization_constant;
            result = std::move(merged.result);
        }
    }
    Rational conflict = Rational(1) - normalization;
    return CombinationReport{std::move(*result), std::move(conflict), std::move(normalization)};
}

std::vector<Rational> induced_distribution(const GeneralizedFunctionalModel& model, std::int64_t theta_label) {
    auto t = model.theta().index_of(theta_label);
    if (!t) throw input_error("parameter " + std::to_string(theta_label) + " not in frame");
    std::vector<Rational> dist(model.outcome_labels().size());
    for (std::size_t w = 0; w < model.omega_count(); ++w) {
        dist[model.outcome_at(*t, w)] += model.omega_probability(w);
    }
    return dist;
}

Rational likelihood(const GeneralizedFunctionalModel& model, const ObservationTally& tally,
                    std::int64_t theta_label) {
    check_tally(model, tally);
    auto dist = induced_distribution(model, theta_label);
    Rational product(1);
    for (const auto& [label, count] : tally.counts()) {
        if (count == 0) continue;
        auto x = model.outcome_index(label);
        product *= dist[*x].pow(static_cast<long long>(count));
    }
    return product;
}

std::vector<Rational> likelihood_profile(const GeneralizedFunctionalModel& model,
                                         const ObservationTally& tally) {
    std::vector<Rational> profile;
    profile.reserve(model.theta().size());
    for (auto label : model.theta().labels()) {
        profile.push_back(likelihood(model, tally, label));
    }
    return profile;
}

Rational proportionality_constant(const GeneralizedFunctionalModel& model, const ObservationTally& tally,
                                  std::size_t max_focal) {
    CombinationReport report = observe_tally(model, tally, max_focal);
    std::vector<Rational> profile = likelihood_profile(model, tally);

    std::optional<Rational> constant;
    for (std::size_t t = 0; t < model.theta().size(); ++t) {
        Hypothesis singleton(model.theta(), std::vector<std::int64_t>{model.theta().label_at(t)});
        Rational pl = plausibility(report.result, singleton);
        if (profile[t].is_zero()) {
            if (!pl.is_zero()) throw error("plausibility is not proportional to likelihood");
            continue;
        }
        Rational candidate = pl / profile[t];
        if (!constant) {
            constant = std::move(candidate);
        } else if (candidate != *constant) {
            throw error("plausibility is not proportional to likelihood");
        }
    }
    if (!constant) throw undefined_error("every parameter has zero likelihood");
    return *constant;
}

} // namespace evw
