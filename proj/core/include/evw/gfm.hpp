#pragma once

#include "evw/frame.hpp"
#include "evw/mass_function.hpp"
#include "evw/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace evw {

// A functional model (f, P): an unknown parameter theta, a random disturbance
// omega with known distribution, and a function f mapping each (theta, omega)
// pair to an observable outcome. Observing an outcome turns the model into
// evidence about theta.
class GeneralizedFunctionalModel {
public:
    // f_table is theta-major: entry [t * omega_count + w] is the outcome index
    // produced by parameter index t under disturbance index w.
    GeneralizedFunctionalModel(Frame theta,
                               std::vector<std::string> omega_labels,
                               std::vector<Rational> omega_probabilities,
                               std::vector<std::string> outcome_labels,
                               std::vector<std::size_t> f_table);

    const Frame& theta() const { return theta_; }
    std::size_t omega_count() const { return omega_labels_.size(); }
    const std::vector<std::string>& omega_labels() const { return omega_labels_; }
    const Rational& omega_probability(std::size_t omega_index) const { return omega_probabilities_[omega_index]; }
    const std::vector<std::string>& outcome_labels() const { return outcome_labels_; }

    std::size_t outcome_at(std::size_t theta_index, std::size_t omega_index) const {
        return f_table_[theta_index * omega_labels_.size() + omega_index];
    }
    std::optional<std::size_t> outcome_index(std::string_view label) const;

    friend bool operator==(const GeneralizedFunctionalModel& a, const GeneralizedFunctionalModel& b);

private:
    Frame theta_;
    std::vector<std::string> omega_labels_;
    std::vector<Rational> omega_probabilities_;
    std::vector<std::string> outcome_labels_;
    std::vector<std::size_t> f_table_;
};

// Multiset of observed outcomes, by label.
class ObservationTally {
public:
    ObservationTally() = default;
    explicit ObservationTally(std::map<std::string, std::uint64_t> counts);

    void add(const std::string& outcome_label, std::uint64_t count = 1);

    const std::map<std::string, std::uint64_t>& counts() const { return counts_; }
    std::uint64_t total() const;

private:
    std::map<std::string, std::uint64_t> counts_;
};

// Evidence from a single observation: each disturbance omega throws its
// probability onto the set of parameters under which omega yields the observed
// outcome; disturbances that cannot yield it at all become conflict and are
// renormalized away. An outcome no parameter can produce is rejected.
CombinationReport observe_one(const GeneralizedFunctionalModel& model, std::string_view outcome_label);

// Evidence from a whole tally, folding the per-outcome evidence together with
// Dempster's rule. The report's normalization constant is cumulative: the
// per-observation constants times the conflict renormalizations of every
// combination step.
CombinationReport observe_tally(const GeneralizedFunctionalModel& model, const ObservationTally& tally,
                                std::size_t max_focal = kNoFocalLimit);

// Outcome distribution of f(theta, omega) for a fixed parameter, indexed like
// outcome_labels().
std::vector<Rational> induced_distribution(const GeneralizedFunctionalModel& model, std::int64_t theta_label);

// Probability of observing the tally under a fixed parameter (product over
// outcomes of induced probabilities, with multiplicity).
Rational likelihood(const GeneralizedFunctionalModel& model, const ObservationTally& tally,
                    std::int64_t theta_label);

// Likelihood of every parameter, indexed like the theta frame.
std::vector<Rational> likelihood_profile(const GeneralizedFunctionalModel& model,
                                         const ObservationTally& tally);

// The constant c with Pl({theta}) = c * likelihood(theta) for every parameter,
// where Pl comes from observe_tally. Throws if the model violates
// proportionality (it never does for models built by this library).
Rational proportionality_constant(const GeneralizedFunctionalModel& model, const ObservationTally& tally,
                                  std::size_t max_focal = kNoFocalLimit);

} // namespace evw
