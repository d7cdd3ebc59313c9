#include "evw/models.hpp"

#include "evw/error.hpp"

#include <limits>
#include <string>
#include <utility>

namespace evw {

namespace {

constexpr std::size_t kBlack = 0;
constexpr std::size_t kWhite = 1;
constexpr std::size_t kDie = 0;
constexpr std::size_t kLive = 1;

BigInt ipow(std::int64_t base, std::uint64_t exp) {
    if (exp > std::numeric_limits<unsigned>::max()) throw error("exponent too large");
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

// i^e - (i-1)^e, the mass increment at rank i.
BigInt rank_increment(std::int64_t i, std::uint64_t e) {
    return ipow(i, e) - ipow(i - 1, e);
}

IndexSet interval_bits(std::size_t frame_size, std::int64_t lo, std::int64_t hi) {
    IndexSet bits(frame_size);
    for (std::int64_t v = lo; v <= hi; ++v) bits.set(static_cast<std::size_t>(v));
    return bits;
}

void check_population(std::int64_t population_size) {
    if (population_size < 1) throw input_error("population size must be at least 1");
}

void check_counts(std::uint64_t live_count, std::uint64_t die_count) {
    if (live_count == 0 && die_count == 0) throw input_error("empty observation tally");
}

} // namespace

GeneralizedFunctionalModel build_urn_gfm1() {
    Frame theta = Frame::integer_range(0, 4);
    std::vector<std::string> omega = {"phi1", "phi2", "phi3", "phi4",
                                      "phi5", "phi6", "phi7", "phi8"};
    std::vector<Rational> p = {Rational(3, 32), Rational(1, 32), Rational(3, 32), Rational(9, 32),
                               Rational(1, 32), Rational(3, 32), Rational(9, 32), Rational(3, 32)};
    // Compositions (white-ball counts) on which each disturbance yields white.
    const std::vector<std::vector<std::int64_t>> white_sets = {
        {4}, {1, 4}, {2, 4}, {3, 4}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 3, 4}};
    std::vector<std::size_t> f(theta.size() * omega.size(), kBlack);
    for (std::size_t w = 0; w < omega.size(); ++w) {
        for (auto label : white_sets[w]) {
            f[static_cast<std::size_t>(label) * omega.size() + w] = kWhite;
        }
    }
    return GeneralizedFunctionalModel(theta, std::move(omega), std::move(p),
                                      {"black", "white"}, std::move(f));
}

GeneralizedFunctionalModel build_urn_gfm2() {
    Frame theta = Frame::integer_range(0, 4);
    std::vector<std::string> omega = {"1", "2", "3", "4"};
    std::vector<Rational> p(4, Rational(1, 4));
    // Position w+1 holds a white ball exactly when the composition has more
    // than w white balls.
    std::vector<std::size_t> f(theta.size() * omega.size(), kBlack);
    for (std::size_t t = 0; t < theta.size(); ++t) {
        for (std::size_t w = 0; w < omega.size(); ++w) {
            if (static_cast<std::int64_t>(w) + 1 <= theta.label_at(t)) {
                f[t * omega.size() + w] = kWhite;
            }
        }
    }
    return GeneralizedFunctionalModel(theta, std::move(omega), std::move(p),
                                      {"black", "white"}, std::move(f));
}

GeneralizedFunctionalModel build_survival_gfm(std::int64_t population_size) {
    check_population(population_size);
    auto n = static_cast<std::size_t>(population_size);
    Frame theta = Frame::integer_range(0, population_size);
    std::vector<std::string> omega;
    omega.reserve(n);
    for (std::size_t w = 1; w <= n; ++w) omega.push_back(std::to_string(w));
    std::vector<Rational> p(n, Rational(1, population_size));
    std::vector<std::size_t> f(theta.size() * n, kDie);
    for (std::size_t t = 0; t < theta.size(); ++t) {
        for (std::size_t w = 0; w < n; ++w) {
            if (static_cast<std::int64_t>(w) + 1 <= theta.label_at(t)) {
                f[t * n + w] = kLive;
            }
        }
    }
    return GeneralizedFunctionalModel(theta, std::move(omega), std::move(p),
                                      {"die", "live"}, std::move(f));
}

SurvivalModel::SurvivalModel(std::int64_t population_size)
    : population_size_((check_population(population_size), population_size)),
      frame_(Frame::integer_range(0, population_size)) {}

GeneralizedFunctionalModel SurvivalModel::to_gfm() const {
    return build_survival_gfm(population_size_);
}

MassFunction survival_mass_all_live(const SurvivalModel& model, std::uint64_t live_count) {
    if (live_count == 0) throw input_error("empty observation tally");
    const std::int64_t n = model.population_size();
    const BigInt denom = ipow(n, live_count);
    MassFunction::FocalMap focal;
    for (std::int64_t i = 1; i <= n; ++i) {
        BigInt num = rank_increment(i, live_count);
        if (num.is_zero()) continue;
        focal.emplace(interval_bits(model.frame().size(), i, n), Rational(num, denom));
    }
    return MassFunction(model.frame(), std::move(focal));
}

MassFunction survival_mass_all_die(const SurvivalModel& model, std::uint64_t die_count) {
    if (die_count == 0) throw input_error("empty observation tally");
    const std::int64_t n = model.population_size();
    const BigInt denom = ipow(n, die_count);
    MassFunction::FocalMap focal;
    for (std::int64_t i = 1; i <= n; ++i) {
        BigInt num = rank_increment(i, die_count);
        if (num.is_zero()) continue;
        focal.emplace(interval_bits(model.frame().size(), 0, n - i), Rational(num, denom));
    }
    return MassFunction(model.frame(), std::move(focal));
}

Rational survival_normalizer(const SurvivalModel& model, std::uint64_t live_count,
                             std::uint64_t die_count) {
    const std::int64_t n = model.population_size();
    BigInt k;
    for (std::int64_t l = 1; l <= n; ++l) {
        k += rank_increment(l, live_count) * ipow(n - l, die_count);
    }
    return Rational(k);
}

MassFunction survival_mass_mixed(const SurvivalModel& model, std::uint64_t live_count,
                                 std::uint64_t die_count) {
    if (live_count == 0 || die_count == 0) {
        throw input_error("mixed evidence requires both outcomes observed");
    }
    const std::int64_t n = model.population_size();
    Rational k = survival_normalizer(model, live_count, die_count);
    if (k.is_zero()) throw undefined_error("incompatible evidence: total conflict");
    const BigInt denom = k.numerator();
    MassFunction::FocalMap focal;
    for (std::int64_t i = 1; i < n; ++i) {
        BigInt live_part = rank_increment(i, live_count);
        if (live_part.is_zero()) continue;
        for (std::int64_t j = 1; i + j <= n; ++j) {
            BigInt die_part = rank_increment(j, die_count);
            if (die_part.is_zero()) continue;
            JointFocalIndex idx{i, j};
            focal.emplace(interval_bits(model.frame().size(), idx.lower(), idx.upper(n)),
                          Rational(live_part * die_part, denom));
        }
    }
    return MassFunction(model.frame(), std::move(focal));
}

namespace {

// Unnormalized plausibility of [lo..hi] under the mixed record:
// lo^m (N-lo)^n plus the increments between lo and hi.
BigInt interval_weight(std::int64_t n, std::uint64_t live_count, std::uint64_t die_count,
                       std::int64_t lo, std::int64_t hi) {
    BigInt total = ipow(lo, live_count) * ipow(n - lo, die_count);
    for (std::int64_t i = lo + 1; i <= hi; ++i) {
        total += rank_increment(i, live_count) * ipow(n - i, die_count);
    }
    return total;
}

// Unnormalized mass of the focal sets spanning the gap between a run ending
// at hi and the next run starting at lo' > hi.
BigInt gap_weight(std::int64_t n, std::uint64_t live_count, std::uint64_t die_count,
                  std::int64_t hi, std::int64_t next_lo) {
    return ipow(hi, live_count) * ipow(n - next_lo, die_count);
}

} // namespace

Rational survival_plausibility_interval(const SurvivalModel& model, std::uint64_t live_count,
                                        std::uint64_t die_count, std::int64_t lo, std::int64_t hi) {
    if (live_count == 0 || die_count == 0) {
        throw input_error("mixed interval plausibility requires both outcomes observed");
    }
    const std::int64_t n = model.population_size();
    if (lo < 0 || hi > n || lo > hi) throw input_error("interval bounds out of range");
    Rational k = survival_normalizer(model, live_count, die_count);
    if (k.is_zero()) throw undefined_error("incompatible evidence: total conflict");
    return Rational(interval_weight(n, live_count, die_count, lo, hi), k.numerator());
}

Rational survival_plausibility(const SurvivalModel& model, std::uint64_t live_count,
                               std::uint64_t die_count, const Hypothesis& h) {
    check_counts(live_count, die_count);
    if (h.frame() != model.frame()) throw input_error("hypothesis frame does not match the model");
    if (h.is_empty()) return Rational(0);
    const std::int64_t n = model.population_size();

    // One-sided records are consonant: plausibility is the best member's.
    if (die_count == 0) {
        std::int64_t best = h.member_labels().back();
        return Rational(best, n).pow(static_cast<long long>(live_count));
    }
    if (live_count == 0) {
        std::int64_t best = h.member_labels().front();
        return Rational(n - best, n).pow(static_cast<long long>(die_count));
    }

    Rational k = survival_normalizer(model, live_count, die_count);
    if (k.is_zero()) throw undefined_error("incompatible evidence: total conflict");

    // Decompose into maximal runs; every focal set is an interval, so a set
    // intersecting two runs spans the whole gap between them and would be
    // counted twice.
    const IndexSet& members = h.members();
    BigInt total;
    std::int64_t prev_hi = -1;
    bool have_prev = false;
    auto i = members.find_first();
    while (i != IndexSet::npos) {
        std::int64_t lo = static_cast<std::int64_t>(i);
        auto j = i;
        auto next = members.find_next(j);
        while (next != IndexSet::npos && next == j + 1) {
            j = next;
            next = members.find_next(j);
        }
        std::int64_t hi = static_cast<std::int64_t>(j);
        total += interval_weight(n, live_count, die_count, lo, hi);
        if (have_prev) total -= gap_weight(n, live_count, die_count, prev_hi, lo);
        prev_hi = hi;
        have_prev = true;
        i = next;
    }
    return Rational(total, k.numerator());
}

LogWeight survival_weight(const SurvivalModel& model, std::uint64_t live_count,
                          std::uint64_t die_count, const Hypothesis& h, const Hypothesis& h2) {
    if (h.is_empty() || h2.is_empty()) throw input_error("hypotheses must be nonempty");
    Rational num = survival_plausibility(model, live_count, die_count, h);
    Rational den = survival_plausibility(model, live_count, die_count, h2);
    return LogWeight::ratio(num, den);
}

Classification survival_classification(const SurvivalModel& model, std::uint64_t live_count,
                                       std::uint64_t die_count) {
    check_counts(live_count, die_count);
    const std::int64_t n = model.population_size();
    if (live_count == 0 || die_count == 0) {
        return n == 1 ? Classification::precise : Classification::consonant;
    }
    if (n == 1) throw undefined_error("incompatible evidence: total conflict");
    return n == 2 ? Classification::precise : Classification::general;
}

TransitionMatrix::TransitionMatrix(std::int64_t population_size)
    : population_size_((check_population(population_size), population_size)),
      matrix_(static_cast<std::size_t>(population_size), static_cast<std::size_t>(population_size)) {
    const std::int64_t n = population_size_;
    for (std::int64_t row = 1; row <= n; ++row) {
        for (std::int64_t col = 1; col <= row; ++col) {
            matrix_.at(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1)) =
                col == row ? Rational(row, n) : Rational(1, n);
        }
    }
}

bool TransitionMatrix::is_column_stochastic() const {
    for (std::size_t c = 0; c < matrix_.cols(); ++c) {
        Rational sum;
        for (std::size_t r = 0; r < matrix_.rows(); ++r) sum += matrix_.at(r, c);
        if (sum != Rational(1)) return false;
    }
    return true;
}

TransitionMatrix build_transition_matrix(std::int64_t population_size) {
    return TransitionMatrix(population_size);
}

std::vector<Rational> survival_mass_vector(const SurvivalModel& model, std::uint64_t live_count) {
    if (live_count == 0) throw input_error("empty observation tally");
    const std::int64_t n = model.population_size();
    const BigInt denom = ipow(n, live_count);
    std::vector<Rational> masses;
    masses.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i) {
        masses.emplace_back(rank_increment(i, live_count), denom);
    }
    return masses;
}

RationalMatrix jordan_power(std::int64_t population_size, std::uint64_t k) {
    check_population(population_size);
    const auto n = static_cast<std::size_t>(population_size);

    // Eigenvector basis: column j is the difference of unit vectors e_j - e_(j+1),
    // except the last, which is e_n. The transition matrix acts on it by i/N.
    RationalMatrix basis(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        basis.at(j, j) = Rational(j + 1 == n ? 1 : -1);
        if (j + 1 < n) basis.at(j + 1, j) = Rational(1);
    }
    RationalMatrix powered(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        powered.at(j, j) = Rational(static_cast<std::int64_t>(j) + 1, population_size)
                               .pow(static_cast<long long>(k));
    }
    return basis * powered * basis.inverse();
}

MassFunction limit_mass_all_live(const SurvivalModel& model) {
    MassFunction::FocalMap focal;
    IndexSet top(model.frame().size());
    top.set(static_cast<std::size_t>(model.population_size()));
    focal.emplace(std::move(top), Rational(1));
    return MassFunction(model.frame(), std::move(focal));
}

} // namespace evw
