#pragma once

#include "evw/evidence.hpp"
#include "evw/frame.hpp"
#include "evw/gfm.hpp"
#include "evw/log_weight.hpp"
#include "evw/mass_function.hpp"
#include "evw/rational_matrix.hpp"

#include <cstdint>
#include <vector>

namespace evw {

// Urn with five compositions (0..4 white balls out of 4). First encoding:
// eight disturbances with hand-picked probabilities and compatible-composition
// sets; draws are "black" or "white".
GeneralizedFunctionalModel build_urn_gfm1();

// Second encoding of the same urn: the disturbance picks one of the four
// positions uniformly, and the draw is white when the position holds a white
// ball. Induces the same outcome distributions as build_urn_gfm1 but carries
// different evidence.
GeneralizedFunctionalModel build_urn_gfm2();

// Population of N individuals with an unknown survival count theta in 0..N.
// The disturbance picks an individual uniformly; the outcome is "live" when
// its position is within the theta survivors, "die" otherwise.
GeneralizedFunctionalModel build_survival_gfm(std::int64_t population_size);

// The survival setting again, as a carrier for the closed-form engine below.
// The closed forms never materialize the quadratic focal structure unless a
// mass function is explicitly requested, so they stay fast for large N.
class SurvivalModel {
public:
    explicit SurvivalModel(std::int64_t population_size);

    std::int64_t population_size() const { return population_size_; }
    const Frame& frame() const { return frame_; }

    // The explicit functional model; the generic engine on this model agrees
    // with every closed form (that is what the tests check).
    GeneralizedFunctionalModel to_gfm() const;

private:
    std::int64_t population_size_;
    Frame frame_;
};

// Index of one focal set of the mixed-evidence mass function: the interval
// [live_rank .. N - die_rank].
struct JointFocalIndex {
    std::int64_t live_rank;
    std::int64_t die_rank;

    bool valid(std::int64_t population_size) const {
        return live_rank >= 1 && die_rank >= 1 && live_rank + die_rank <= population_size;
    }
    std::int64_t lower() const { return live_rank; }
    std::int64_t upper(std::int64_t population_size) const { return population_size - die_rank; }
};

// Closed-form evidence after live_count all-live observations: mass
// (i^m - (i-1)^m) / N^m on each interval [i..N].
MassFunction survival_mass_all_live(const SurvivalModel& model, std::uint64_t live_count);

// Closed-form evidence after die_count all-die observations: mass
// (i^n - (i-1)^n) / N^n on each interval [0..N-i].
MassFunction survival_mass_all_die(const SurvivalModel& model, std::uint64_t die_count);

// Closed-form combined evidence for a mixed record (both counts >= 1): mass
// proportional to (i^m - (i-1)^m)(j^n - (j-1)^n) on [i..N-j] over the index
// set i, j >= 1, i + j <= N. Total conflict (N = 1) is an error. Focal count
// grows quadratically in N.
MassFunction survival_mass_mixed(const SurvivalModel& model, std::uint64_t live_count,
                                 std::uint64_t die_count);

// The shared normalizer of the mixed record:
// sum over l of (l^m - (l-1)^m) (N-l)^n.
Rational survival_normalizer(const SurvivalModel& model, std::uint64_t live_count,
                             std::uint64_t die_count);

// Plausibility of the interval hypothesis [lo..hi] under a mixed record,
// without materializing the mass function.
Rational survival_plausibility_interval(const SurvivalModel& model, std::uint64_t live_count,
                                        std::uint64_t die_count, std::int64_t lo, std::int64_t hi);

// Plausibility of an arbitrary hypothesis under any record (consonant max
// rule when one count is zero, run decomposition of the mixed closed form
// otherwise).
Rational survival_plausibility(const SurvivalModel& model, std::uint64_t live_count,
                               std::uint64_t die_count, const Hypothesis& h);

// Weight of evidence Pl(h) / Pl(h2) from the closed forms.
LogWeight survival_weight(const SurvivalModel& model, std::uint64_t live_count,
                          std::uint64_t die_count, const Hypothesis& h, const Hypothesis& h2);

// Structure of the evidence without building it: all-live and all-die records
// are consonant (precise when N = 1), mixed records are precise at N = 2 and
// general from N = 3 on.
Classification survival_classification(const SurvivalModel& model, std::uint64_t live_count,
                                       std::uint64_t die_count);

// One more all-live observation maps the all-live mass vector (masses of
// [1..N], ..., [N..N]) linearly; this is that matrix. Lower triangular and
// column stochastic.
class TransitionMatrix {
public:
    explicit TransitionMatrix(std::int64_t population_size);

    std::int64_t population_size() const { return population_size_; }
    const RationalMatrix& matrix() const { return matrix_; }
    bool is_column_stochastic() const;

    std::vector<Rational> apply(const std::vector<Rational>& masses) const { return matrix_ * masses; }

private:
    std::int64_t population_size_;
    RationalMatrix matrix_;
};

TransitionMatrix build_transition_matrix(std::int64_t population_size);

// Masses of the all-live evidence as a vector aligned with the intervals
// [1..N], ..., [N..N]; the transition matrix advances it by one observation.
std::vector<Rational> survival_mass_vector(const SurvivalModel& model, std::uint64_t live_count);

// Exact k-th power of the transition matrix through its eigendecomposition
// T = M D M^(-1) with eigenvalues i/N: only one matrix inversion regardless
// of k.
RationalMatrix jordan_power(std::int64_t population_size, std::uint64_t k);

// Limit of the all-live evidence as the record grows: certainty that everyone
// survives.
MassFunction limit_mass_all_live(const SurvivalModel& model);

} // namespace evw
