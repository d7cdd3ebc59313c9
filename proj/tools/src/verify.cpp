#include "verify.hpp"

#include <evw/error.hpp>
#include <evw/evidence.hpp>
#include <evw/gfm.hpp>
#include <evw/hypothesis_expr.hpp>
#include <evw/json_io.hpp>
#include <evw/log_weight.hpp>
#include <evw/mass_function.hpp>
#include <evw/models.hpp>
#include <evw/rational_matrix.hpp>

#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace evw::cli {

namespace {

class Reporter {
public:
    explicit Reporter(std::ostream& out) : out_(out) {}

    void begin_suite(const std::string& name) {
        suite_ = name;
        suite_pass_ = 0;
        suite_fail_ = 0;
    }

    void check(bool ok, const std::string& what, const std::string& detail = "") {
        if (ok) {
            ++suite_pass_;
            return;
        }
        ++suite_fail_;
        ++total_fail_;
        if (printed_failures_ < 8) {
            ++printed_failures_;
            out_ << suite_ << ": FAIL " << what;
            if (!detail.empty()) out_ << " -- " << detail;
            out_ << "\n";
        }
    }

    // For checks where the expected outcome is a specific exception type.
    template <typename Exception, typename Fn>
    void check_throws(const std::string& what, Fn&& fn) {
        try {
            fn();
            check(false, what, "no exception thrown");
        } catch (const Exception&) {
            check(true, what);
        } catch (const std::exception& e) {
            check(false, what, std::string("wrong exception: ") + e.what());
        }
    }

    void end_suite() {
        out_ << suite_ << ": " << suite_pass_ << "/" << (suite_pass_ + suite_fail_)
             << " checks passed\n";
    }

    bool all_passed() const { return total_fail_ == 0; }

private:
    std::ostream& out_;
    std::string suite_;
    int suite_pass_ = 0;
    int suite_fail_ = 0;
    int total_fail_ = 0;
    int printed_failures_ = 0;
};

struct Context {
    Reporter& rep;
    bool full;
    bool fault;
    std::mt19937_64 rng;
};

// ---- shared generators and oracles ----

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-400, 400);
    std::uniform_int_distribution<long long> den(1, 60);
    return Rational(num(rng), den(rng));
}

IndexSet random_subset(std::mt19937_64& rng, std::size_t size, bool nonempty) {
    std::uniform_int_distribution<std::uint64_t> bits(nonempty ? 1 : 0, (1ull << size) - 1);
    return IndexSet(size, bits(rng));
}

MassFunction random_mass(std::mt19937_64& rng, const Frame& frame, std::size_t max_extra,
                         bool keep_full_set) {
    std::uniform_int_distribution<std::size_t> count(1, max_extra);
    std::uniform_int_distribution<int> weight(1, 9);
    std::vector<std::pair<IndexSet, Rational>> focals;
    std::vector<long long> weights;
    long long total = 0;
    std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) {
        focals.emplace_back(random_subset(rng, frame.size(), true), Rational(0));
        weights.push_back(weight(rng));
        total += weights.back();
    }
    if (keep_full_set) {
        IndexSet all(frame.size());
        all.set();
        focals.emplace_back(std::move(all), Rational(0));
        weights.push_back(weight(rng));
        total += weights.back();
    }
    for (std::size_t i = 0; i < focals.size(); ++i) focals[i].second = Rational(weights[i], total);
    return MassFunction::from_focals(frame, focals);
}

MassFunction random_nested_mass(std::mt19937_64& rng, const Frame& frame) {
    // grow a chain by flipping in extra elements
    std::uniform_int_distribution<std::size_t> first(0, frame.size() - 1);
    std::uniform_int_distribution<int> weight(1, 9);
    std::vector<std::pair<IndexSet, Rational>> focals;
    IndexSet current(frame.size());
    current.set(first(rng));
    std::vector<long long> weights;
    long long total = 0;
    while (true) {
        focals.emplace_back(current, Rational(0));
        weights.push_back(weight(rng));
        total += weights.back();
        if (current.all()) break;
        std::uniform_int_distribution<int> coin(0, 2);
        if (coin(rng) == 0 && focals.size() > 1) break;
        std::size_t bit = first(rng);
        while (current.test(bit)) bit = (bit + 1) % frame.size();
        current.set(bit);
    }
    for (std::size_t i = 0; i < focals.size(); ++i) focals[i].second = Rational(weights[i], total);
    return MassFunction::from_focals(frame, focals);
}

MassFunction random_precise_mass(std::mt19937_64& rng, const Frame& frame) {
    std::uniform_int_distribution<int> weight(0, 9);
    std::vector<std::pair<IndexSet, Rational>> focals;
    std::vector<long long> weights;
    long long total = 0;
    for (std::size_t i = 0; i < frame.size(); ++i) {
        int w = weight(rng);
        if (w == 0 && total > 0) continue;
        IndexSet single(frame.size());
        single.set(i);
        focals.emplace_back(std::move(single), Rational(0));
        weights.push_back(w == 0 ? 1 : w);
        total += weights.back();
    }
    for (std::size_t i = 0; i < focals.size(); ++i) focals[i].second = Rational(weights[i], total);
    return MassFunction::from_focals(frame, focals);
}

Hypothesis random_hypothesis(std::mt19937_64& rng, const Frame& frame) {
    return Hypothesis(frame, random_subset(rng, frame.size(), true));
}

// All-at-once product-space combination: one pass over every tuple of focal
// sets, independent of the pairwise fold it checks.
std::pair<MassFunction, Rational> oneshot_combine(const std::vector<MassFunction>& parts) {
    const Frame& frame = parts.front().frame();
    MassFunction::FocalMap acc;
    Rational conflict;
    IndexSet all(frame.size());
    all.set();
    std::function<void(std::size_t, const IndexSet&, const Rational&)> walk =
        [&](std::size_t k, const IndexSet& meet, const Rational& mass) {
            if (k == parts.size()) {
                if (meet.none()) {
                    conflict += mass;
                } else {
                    auto [it, inserted] = acc.emplace(meet, mass);
                    if (!inserted) it->second += mass;
                }
                return;
            }
            for (const auto& [set, m] : parts[k].focal()) {
                walk(k + 1, meet & set, mass * m);
            }
        };
    walk(0, all, Rational(1));
    Rational normalization = Rational(1) - conflict;
    if (normalization.is_zero()) throw undefined_error("incompatible evidence: total conflict");
    for (auto& [set, mass] : acc) mass /= normalization;
    return {MassFunction(frame, std::move(acc)), std::move(normalization)};
}

GeneralizedFunctionalModel with_swapped_probabilities(const GeneralizedFunctionalModel& model,
                                                      std::size_t a, std::size_t b) {
    std::vector<Rational> p;
    for (std::size_t w = 0; w < model.omega_count(); ++w) p.push_back(model.omega_probability(w));
    std::swap(p[a], p[b]);
    std::vector<std::size_t> f(model.theta().size() * model.omega_count());
    for (std::size_t t = 0; t < model.theta().size(); ++t) {
        for (std::size_t w = 0; w < model.omega_count(); ++w) {
            f[t * model.omega_count() + w] = model.outcome_at(t, w);
        }
    }
    return GeneralizedFunctionalModel(model.theta(), model.omega_labels(), std::move(p),
                                      model.outcome_labels(), std::move(f));
}

std::string describe(const Hypothesis& h) {
    return format_hypothesis(h);
}

ObservationTally urn_tally(std::uint64_t white, std::uint64_t black) {
    ObservationTally tally;
    if (white > 0) tally.add("white", white);
    if (black > 0) tally.add("black", black);
    return tally;
}

ObservationTally survival_tally(std::uint64_t live, std::uint64_t die) {
    ObservationTally tally;
    if (live > 0) tally.add("live", live);
    if (die > 0) tally.add("die", die);
    return tally;
}

// ---- suites ----

void suite_frames(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.begin_suite("frames");

    const std::vector<std::string> corpus = {
        "0", "1", "-1", "7", "3/32", "-3/4", "9283/32768", "1048576/133441",
        "13717421013717421/109739369", "2/3"};
    for (const auto& text : corpus) {
        Rational q = Rational::parse(text);
        rep.check(q.to_string() == text, "rational parse/format round-trip",
                  text + " -> " + q.to_string());
    }
    int rounds = ctx.full ? 2000 : 300;
    for (int i = 0; i < rounds; ++i) {
        Rational q = random_rational(ctx.rng);
        rep.check(Rational::parse(q.to_string()) == q, "rational format/parse round-trip",
                  q.to_string());
        Rational b = random_rational(ctx.rng);
        rep.check((q + b) - b == q, "addition/subtraction cancel", q.to_string());
        if (!b.is_zero()) {
            rep.check((q * b) / b == q, "multiplication/division cancel", q.to_string());
        }
        rep.check(q.pow(3) == q * q * q, "pow matches repeated product", q.to_string());
        if (!q.is_zero()) {
            rep.check(q.pow(-2) * q.pow(2) == Rational(1), "negative pow is reciprocal",
                      q.to_string());
        }
    }
    rep.check(Rational(-6, 8).to_string() == "-3/4", "canonical lowest terms");
    rep.check(Rational(6, -8) == Rational(-3, 4), "denominator sign normalized");
    rep.check(Rational(0, 5).to_string() == "0", "zero canonical");
    rep.check(Rational(2).pow(0) == Rational(1), "pow zero exponent");
    rep.check(Rational(0).pow(4).is_zero(), "zero to positive power");
    rep.check_throws<error>("zero to negative power rejected", [] { Rational(0).pow(-1); });

    for (const std::string& bad : {"", "-", "3/", "/4", "3/0", "1.5", "+2", "a", "3 / 4", "--3"}) {
        rep.check_throws<input_error>("malformed rational rejected: '" + bad + "'",
                                      [&] { Rational::parse(bad); });
    }

    rep.check(std::abs(Rational(1000).log10_value() - 3.0) < 1e-12, "log10 of 1000");
    rep.check(std::abs(Rational(2).pow(100).log10_value() - 100 * std::log10(2.0)) < 1e-9,
              "log10 of 2^100");
    rep.check(std::abs(Rational(1, 8).log10_value() + 3 * std::log10(2.0)) < 1e-12,
              "log10 of 1/8");

    rep.check_throws<input_error>("duplicate frame label rejected",
                                  [] { Frame({1, 2, 2}); });
    rep.check_throws<input_error>("empty frame rejected", [] { Frame({}); });
    Frame f10 = Frame::integer_range(0, 10);
    rep.check(f10.size() == 11 && f10.label_at(0) == 0 && f10.label_at(10) == 10,
              "integer_range labels");
    rep.check(f10.index_of(7) == std::size_t{7} && !f10.index_of(11).has_value(), "index_of");

    int hyp_rounds = ctx.full ? 500 : 120;
    for (int i = 0; i < hyp_rounds; ++i) {
        std::uniform_int_distribution<std::int64_t> hi_dist(0, 8);
        Frame frame = Frame::integer_range(0, hi_dist(ctx.rng));
        Hypothesis h = Hypothesis(frame, random_subset(ctx.rng, frame.size(), false));
        rep.check(h.complement().complement() == h, "complement involution", describe(h));
        rep.check((h.members() | h.complement().members()).all() &&
                      !(h.members() & h.complement().members()).any(),
                  "complement partitions the frame", describe(h));
    }

    Hypothesis interval = make_interval_hypothesis(f10, 3, 6);
    rep.check(interval.member_labels() == std::vector<std::int64_t>({3, 4, 5, 6}),
              "interval members");
    rep.check_throws<input_error>("interval bound outside frame",
                                  [&] { make_interval_hypothesis(f10, 3, 11); });
    rep.check_throws<input_error>("interval bounds out of order",
                                  [&] { make_interval_hypothesis(f10, 6, 3); });

    Hypothesis at_least = make_rate_hypothesis(f10, Rational(2, 5), RateDirection::at_least);
    rep.check(at_least == make_interval_hypothesis(f10, 4, 10), "rate >=2/5 on 0..10");
    Hypothesis exact = make_rate_hypothesis(f10, Rational(1, 2), RateDirection::exactly);
    rep.check(exact.member_labels() == std::vector<std::int64_t>({5}), "rate =1/2 on 0..10");
    rep.check_throws<input_error>("misaligned rate rejected", [&] {
        make_rate_hypothesis(f10, Rational(1, 3), RateDirection::at_least);
    });
    rep.check_throws<input_error>("rate needs 0..N frame", [] {
        make_rate_hypothesis(Frame::integer_range(1, 5), Rational(1, 5), RateDirection::exactly);
    });
    rep.check_throws<input_error>("rate above 1 rejected", [&] {
        make_rate_hypothesis(f10, Rational(6, 5), RateDirection::at_least);
    });

    rep.check(LogWeight::ratio(Rational(0), Rational(1)) == Rational(0), "zero weight ratio");
    rep.check(LogWeight::ratio(Rational(1), Rational(0)).is_infinite(), "infinite weight ratio");
    rep.check_throws<undefined_error>("0/0 weight undefined",
                                      [] { LogWeight::ratio(Rational(0), Rational(0)); });
    rep.check(LogWeight::infinity().to_string() == "inf", "infinite weight rendering");
    rep.check(std::isinf(LogWeight::infinity().log10()), "infinite weight log10");

    rep.end_suite();
}

void suite_belief_core(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.begin_suite("belief-core");

    int rounds = ctx.full ? 1000 : 200;
    std::uniform_int_distribution<std::int64_t> hi_dist(0, 5);
    for (int i = 0; i < rounds; ++i) {
        Frame frame = Frame::integer_range(0, hi_dist(ctx.rng));
        MassFunction a = random_mass(ctx.rng, frame, 4, true);
        MassFunction b = random_mass(ctx.rng, frame, 4, true);
        Hypothesis h = random_hypothesis(ctx.rng, frame);

        rep.check(belief(a, h) <= plausibility(a, h), "belief bounded by plausibility",
                  describe(h));
        rep.check(plausibility(a, h) == Rational(1) - belief(a, h.complement()),
                  "plausibility is complement of complementary belief", describe(h));
        rep.check(belief(a, Hypothesis::full(frame)) == Rational(1), "belief of full frame");
        rep.check(plausibility(a, Hypothesis::empty(frame)).is_zero(),
                  "plausibility of empty set");

        CombinationReport ab = combine(a, b);
        CombinationReport ba = combine(b, a);
        rep.check(ab.result == ba.result && ab.conflict_mass == ba.conflict_mass,
                  "combination commutes");
        rep.check(ab.normalization_constant == Rational(1) - ab.conflict_mass,
                  "normalization complements conflict");

        CombinationReport with_vacuous = combine(a, MassFunction::vacuous(frame));
        rep.check(with_vacuous.result == a && with_vacuous.conflict_mass.is_zero(),
                  "vacuous mass function is the identity");

        MassFunction c = random_mass(ctx.rng, frame, 3, true);
        MassFunction left = combine(combine(a, b).result, c).result;
        MassFunction right = combine(a, combine(b, c).result).result;
        rep.check(left == right, "combination associates");

        auto [oneshot, oneshot_norm] = oneshot_combine({a, b, c});
        CombinationReport fold1 = combine(a, b);
        CombinationReport fold2 = combine(fold1.result, c);
        rep.check(oneshot == left, "pairwise fold matches product-space oracle");
        rep.check(oneshot_norm == fold1.normalization_constant * fold2.normalization_constant,
                  "cumulative normalization matches product-space oracle");
    }

    int classify_rounds = ctx.full ? 300 : 80;
    for (int i = 0; i < classify_rounds; ++i) {
        Frame frame = Frame::integer_range(0, 1 + hi_dist(ctx.rng));
        MassFunction nested = random_nested_mass(ctx.rng, frame);
        Classification c = classify(nested);
        bool all_singletons = true;
        for (const auto& [set, mass] : nested.focal()) all_singletons &= set.count() == 1;
        rep.check(c == (all_singletons ? Classification::precise : Classification::consonant),
                  "nested chain classifies consonant");

        Hypothesis h = random_hypothesis(ctx.rng, frame);
        Rational max_pl;
        for (auto idx = h.members().find_first(); idx != IndexSet::npos;
             idx = h.members().find_next(idx)) {
            Hypothesis single(frame, std::vector<std::int64_t>{frame.label_at(idx)});
            Rational pl = plausibility(nested, single);
            if (pl > max_pl) max_pl = pl;
        }
        rep.check(plausibility(nested, h) == max_pl, "consonant plausibility is the member max",
                  describe(h));

        MassFunction precise = random_precise_mass(ctx.rng, frame);
        rep.check(classify(precise) == Classification::precise, "singletons classify precise");
        Rational sum_pl;
        for (auto idx = h.members().find_first(); idx != IndexSet::npos;
             idx = h.members().find_next(idx)) {
            Hypothesis single(frame, std::vector<std::int64_t>{frame.label_at(idx)});
            sum_pl += plausibility(precise, single);
        }
        rep.check(plausibility(precise, h) == sum_pl, "precise plausibility is the member sum");
        rep.check(belief(precise, h) == plausibility(precise, h),
                  "precise belief equals plausibility");
    }

    {
        Frame frame = Frame::integer_range(0, 2);
        MassFunction general = MassFunction::from_focals(
            frame, {{IndexSet(3, 0b001), Rational(1, 3)},
                    {IndexSet(3, 0b010), Rational(1, 3)},
                    {IndexSet(3, 0b011), Rational(1, 3)}});
        rep.check(classify(general) == Classification::general, "overlapping sets classify general");
        rep.check(classify(MassFunction::vacuous(frame)) == Classification::consonant,
                  "vacuous classifies consonant");
        rep.check(classify(MassFunction::vacuous(Frame::integer_range(1, 1))) ==
                      Classification::precise,
                  "vacuous on a single-element frame classifies precise");

        MassFunction left = MassFunction::from_focals(frame, {{IndexSet(3, 0b001), Rational(1)}});
        MassFunction right = MassFunction::from_focals(frame, {{IndexSet(3, 0b010), Rational(1)}});
        rep.check_throws<undefined_error>("total conflict is an error",
                                          [&] { combine(left, right); });
        rep.check_throws<focal_limit_error>("focal cap enforced", [&] {
            MassFunction a = MassFunction::from_focals(
                frame, {{IndexSet(3, 0b011), Rational(1, 2)}, {IndexSet(3, 0b110), Rational(1, 2)}});
            MassFunction b = MassFunction::from_focals(
                frame, {{IndexSet(3, 0b101), Rational(1, 2)}, {IndexSet(3, 0b111), Rational(1, 2)}});
            combine(a, b, 1);
        });

        CombinationReport power1 = combine_power(left, 1);
        rep.check(power1.result == left && power1.normalization_constant == Rational(1),
                  "first power is the input");
    }

    int json_rounds = ctx.full ? 200 : 50;
    for (int i = 0; i < json_rounds; ++i) {
        Frame frame = Frame::integer_range(0, 1 + hi_dist(ctx.rng));
        MassFunction m = random_mass(ctx.rng, frame, 4, false);
        MassFunction back = mass_function_from_json_text(to_json_text(m));
        rep.check(back == m, "mass function JSON round-trip");
    }
    rep.check_throws<input_error>("JSON reader rejects bad mass sum", [] {
        mass_function_from_json_text(
            R"({"frame":[0,1],"focal":[{"set":[0],"mass":"1/2"}]})");
    });
    rep.check_throws<input_error>("JSON reader rejects empty focal set", [] {
        mass_function_from_json_text(
            R"({"frame":[0,1],"focal":[{"set":[],"mass":"1"}]})");
    });
    rep.check_throws<input_error>("JSON reader rejects non-positive mass", [] {
        mass_function_from_json_text(
            R"({"frame":[0,1],"focal":[{"set":[0],"mass":"0"},{"set":[1],"mass":"1"}]})");
    });
    rep.check_throws<input_error>("JSON reader rejects unknown labels", [] {
        mass_function_from_json_text(
            R"({"frame":[0,1],"focal":[{"set":[7],"mass":"1"}]})");
    });

    rep.end_suite();
}

void suite_gfm(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.begin_suite("gfm");

    GeneralizedFunctionalModel gfm1 =
        ctx.fault ? with_swapped_probabilities(build_urn_gfm1(), 3, 7) : build_urn_gfm1();
    GeneralizedFunctionalModel gfm2 = build_urn_gfm2();

    // the two urn encodings induce the same outcome distributions
    for (std::int64_t theta = 0; theta <= 4; ++theta) {
        auto d1 = induced_distribution(gfm1, theta);
        auto d2 = induced_distribution(gfm2, theta);
        std::ostringstream detail;
        detail << "theta=" << theta << " first=" << d1[1] << " second=" << d2[1];
        rep.check(d1 == d2, "urn models induce the same distribution", detail.str());
        rep.check(d2[1] == Rational(theta, 4), "white probability is composition over four",
                  detail.str());
        Rational total = d1[0] + d1[1];
        rep.check(total == Rational(1), "induced distribution sums to one");
    }

    {
        CombinationReport white = observe_one(gfm1, "white");
        rep.check(white.result.focal_count() == 8, "eight focal sets from the first urn model");
        rep.check(white.normalization_constant == Rational(1),
                  "white observation carries no conflict");
        const std::vector<std::pair<std::vector<std::int64_t>, Rational>> expected = {
            {{4}, Rational(3, 32)},          {{1, 4}, Rational(1, 32)},
            {{2, 4}, Rational(3, 32)},       {{3, 4}, Rational(9, 32)},
            {{1, 2, 4}, Rational(1, 32)},    {{1, 3, 4}, Rational(3, 32)},
            {{2, 3, 4}, Rational(9, 32)},    {{1, 2, 3, 4}, Rational(3, 32)}};
        for (const auto& [labels, mass] : expected) {
            Hypothesis h(gfm1.theta(), labels);
            auto it = white.result.focal().find(h.members());
            bool ok = it != white.result.focal().end() && it->second == mass;
            rep.check(ok, "first urn model focal masses", describe(h));
        }
    }
    {
        CombinationReport white = observe_one(gfm2, "white");
        rep.check(white.result.focal_count() == 4, "four nested focal sets from the second model");
        for (const auto& [set, mass] : white.result.focal()) {
            rep.check(mass == Rational(1, 4), "uniform nested masses");
        }
        rep.check(classify(white.result) == Classification::consonant,
                  "single white observation is consonant");
        CombinationReport black = observe_one(gfm2, "black");
        for (const auto& [set, mass] : black.result.focal()) {
            rep.check(set.test(0), "black focal sets keep the empty composition");
        }
        rep.check(classify(black.result) == Classification::consonant,
                  "single black observation is consonant");
    }

    {
        SurvivalModel s4(4);
        auto survival_gfm = s4.to_gfm();
        bool same_tables = survival_gfm.theta() == gfm2.theta() &&
                           survival_gfm.omega_labels() == gfm2.omega_labels();
        for (std::size_t t = 0; t < 5 && same_tables; ++t) {
            for (std::size_t w = 0; w < 4; ++w) {
                same_tables &= survival_gfm.outcome_at(t, w) == gfm2.outcome_at(t, w);
            }
        }
        rep.check(same_tables, "survival at four equals the second urn construction");
        auto top = induced_distribution(survival_gfm, 4);
        rep.check(top[1] == Rational(1), "certain survival at the top composition");
    }

    // combining per-outcome evidence is order-independent
    for (std::uint64_t white = 1; white <= 2; ++white) {
        for (std::uint64_t black = 1; black <= 2; ++black) {
            CombinationReport w = combine_power(observe_one(gfm2, "white").result, white);
            CombinationReport b = combine_power(observe_one(gfm2, "black").result, black);
            CombinationReport wb = combine(w.result, b.result);
            CombinationReport bw = combine(b.result, w.result);
            rep.check(wb.result == bw.result && wb.conflict_mass == bw.conflict_mass,
                      "observation order is irrelevant");
            CombinationReport tally_report = observe_tally(gfm2, urn_tally(white, black));
            rep.check(tally_report.result == wb.result, "tally matches manual fold");
            Rational expected_norm = w.normalization_constant * b.normalization_constant *
                                     wb.normalization_constant;
            rep.check(tally_report.normalization_constant == expected_norm,
                      "cumulative normalization across outcomes");
        }
    }

    rep.check_throws<input_error>("empty tally rejected",
                                  [&] { observe_tally(gfm2, ObservationTally{}); });
    rep.check_throws<input_error>("zero-count tally rejected",
                                  [&] { observe_tally(gfm2, urn_tally(0, 0)); });
    rep.check_throws<input_error>("unknown outcome rejected",
                                  [&] { observe_one(gfm2, "green"); });
    {
        // an outcome listed but never produced
        Frame theta = Frame::integer_range(0, 1);
        GeneralizedFunctionalModel dead(theta, {"w1", "w2"}, {Rational(1, 2), Rational(1, 2)},
                                        {"a", "b", "c"}, {0, 1, 1, 0});
        rep.check_throws<input_error>("impossible outcome rejected",
                                      [&] { observe_one(dead, "c"); });
    }

    // plausibility of each single parameter is proportional to its likelihood
    const std::vector<std::pair<std::string, GeneralizedFunctionalModel>> models = {
        {"urn-gfm1", gfm1}, {"urn-gfm2", gfm2}, {"survival:5", SurvivalModel(5).to_gfm()}};
    std::uint64_t tally_cap = ctx.full ? 5 : 4;
    for (const auto& [name, model] : models) {
        bool survival = name.starts_with("survival");
        for (std::uint64_t first = 0; first <= tally_cap; ++first) {
            for (std::uint64_t second = 0; first + second <= tally_cap; ++second) {
                if (first + second == 0) continue;
                ObservationTally tally =
                    survival ? survival_tally(first, second) : urn_tally(first, second);
                Rational c = proportionality_constant(model, tally);
                CombinationReport report = observe_tally(model, tally);
                std::ostringstream detail;
                detail << name << " tally " << first << "," << second << " c=" << c;
                rep.check(c == Rational(1) / report.normalization_constant,
                          "constant is reciprocal of cumulative normalization", detail.str());
            }
        }
    }

    {
        // frozen constants for the urn models under one white and one black
        Rational c1 = proportionality_constant(gfm1, urn_tally(1, 1));
        rep.check(c1 == Rational(1024, 517), "first urn constant at one of each",
                  c1.to_string());
        Rational c2 = proportionality_constant(gfm2, urn_tally(1, 1));
        rep.check(c2 == Rational(8, 3), "second urn constant at one of each", c2.to_string());
        Rational c22 = proportionality_constant(gfm2, urn_tally(2, 2));
        rep.check(c22 == Rational(128, 13), "second urn constant at two of each",
                  c22.to_string());
    }

    {
        auto profile = likelihood_profile(gfm2, urn_tally(2, 0));
        bool ok = true;
        for (std::int64_t theta = 0; theta <= 4; ++theta) {
            ok &= profile[static_cast<std::size_t>(theta)] == Rational(theta, 4).pow(2);
        }
        rep.check(ok, "likelihood profile of two whites");
        rep.check(likelihood(gfm2, urn_tally(1, 1), 4).is_zero(),
                  "mixed record impossible at the all-white composition");
    }

    rep.end_suite();
}

void suite_evidence(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.begin_suite("evidence");

    GeneralizedFunctionalModel gfm1 = build_urn_gfm1();
    GeneralizedFunctionalModel gfm2 = build_urn_gfm2();

    rep.check(supports(gfm2, "white", 3, 1), "white supports more whites");
    rep.check(!supports(gfm2, "white", 1, 3), "white does not support fewer whites");
    rep.check_throws<undefined_error>("support against impossible reference", [&] {
        supports(gfm2, "black", 1, 4);
    });

    // weight between single parameters is the likelihood ratio
    const std::vector<std::pair<std::string, GeneralizedFunctionalModel>> models = {
        {"urn-gfm1", gfm1}, {"urn-gfm2", gfm2}, {"survival:4", SurvivalModel(4).to_gfm()}};
    for (const auto& [name, model] : models) {
        bool survival = name.starts_with("survival");
        for (std::uint64_t a = 0; a <= 2; ++a) {
            for (std::uint64_t b = 0; a + b <= 2; ++b) {
                if (a + b == 0) continue;
                ObservationTally tally = survival ? survival_tally(a, b) : urn_tally(a, b);
                CombinationReport report = observe_tally(model, tally);
                const auto& labels = model.theta().labels();
                for (auto t1 : labels) {
                    for (auto t2 : labels) {
                        Hypothesis h1(model.theta(), std::vector<std::int64_t>{t1});
                        Hypothesis h2(model.theta(), std::vector<std::int64_t>{t2});
                        LogWeight via_simple = LogWeight(Rational(0));
                        LogWeight via_general = LogWeight(Rational(0));
                        bool simple_defined = true;
                        bool general_defined = true;
                        try {
                            via_simple = weight_simple(model, tally, t1, t2);
                        } catch (const undefined_error&) {
                            simple_defined = false;
                        }
                        try {
                            via_general = weight(report.result, h1, h2);
                        } catch (const undefined_error&) {
                            general_defined = false;
                        }
                        std::ostringstream detail;
                        detail << name << " " << t1 << " vs " << t2;
                        rep.check(simple_defined == general_defined &&
                                      (!simple_defined || via_simple == via_general),
                                  "simple weight is the likelihood ratio", detail.str());
                    }
                }
            }
        }
    }

    {
        // two parameters, identity function: evidence is precise
        Frame theta = Frame::integer_range(1, 2);
        GeneralizedFunctionalModel toy(theta, {"1", "2"}, {Rational(1, 2), Rational(1, 2)},
                                       {"0", "1"},
                                       {1, 0, 0, 1});
        ObservationTally one;
        one.add("1", 1);
        CombinationReport report = observe_tally(toy, one);
        rep.check(classify(report.result) == Classification::precise, "identity model is precise");
        Hypothesis both(theta, std::vector<std::int64_t>{1, 2});
        Hypothesis first(theta, std::vector<std::int64_t>{1});
        LogWeight w = weight(report.result, both, first);
        rep.check(w == Rational(2), "composite weight doubles the singleton",
                  w.to_string());
        std::vector<Rational> likelihoods = likelihood_profile(toy, one);
        rep.check(weight_precise(likelihoods, both, first) == w,
                  "sum rule matches the general weight");
    }

    {
        // consonant law on the second urn model, every hypothesis pair
        for (std::uint64_t m = 1; m <= 3; ++m) {
            CombinationReport report = observe_tally(gfm2, urn_tally(m, 0));
            rep.check(classify(report.result) == Classification::consonant,
                      "all-white record is consonant");
            std::vector<Rational> singles;
            for (auto label : gfm2.theta().labels()) {
                singles.push_back(plausibility(
                    report.result, Hypothesis(gfm2.theta(), std::vector<std::int64_t>{label})));
            }
            int checked = 0;
            for (std::uint64_t bits1 = 1; bits1 < 32; ++bits1) {
                for (std::uint64_t bits2 = 1; bits2 < 32; ++bits2) {
                    Hypothesis h1(gfm2.theta(), IndexSet(5, bits1));
                    Hypothesis h2(gfm2.theta(), IndexSet(5, bits2));
                    LogWeight general = LogWeight(Rational(0));
                    LogWeight shortcut = LogWeight(Rational(0));
                    bool general_defined = true;
                    bool shortcut_defined = true;
                    try {
                        general = weight(report.result, h1, h2);
                    } catch (const undefined_error&) {
                        general_defined = false;
                    }
                    try {
                        shortcut = weight_consonant(singles, h1, h2);
                    } catch (const undefined_error&) {
                        shortcut_defined = false;
                    }
                    bool ok = general_defined == shortcut_defined &&
                              (!general_defined || general == shortcut);
                    if (!ok) ++checked;
                    rep.check(ok, "max rule matches the general weight",
                              describe(h1) + " vs " + describe(h2));
                }
            }
        }
    }

    {
        // antisymmetry and monotonicity on a mixed survival record
        SurvivalModel model(5);
        std::uniform_int_distribution<std::uint64_t> bits(1, 63);
        int rounds = ctx.full ? 300 : 80;
        for (int i = 0; i < rounds; ++i) {
            Hypothesis h1(model.frame(), IndexSet(6, bits(ctx.rng)));
            Hypothesis h2(model.frame(), IndexSet(6, bits(ctx.rng)));
            Rational pl1 = survival_plausibility(model, 2, 1, h1);
            Rational pl2 = survival_plausibility(model, 2, 1, h2);
            if (pl1.is_zero() || pl2.is_zero()) continue;
            LogWeight forward = survival_weight(model, 2, 1, h1, h2);
            LogWeight backward = survival_weight(model, 2, 1, h2, h1);
            rep.check(forward.exact() * backward.exact() == Rational(1),
                      "weights invert when the pair swaps",
                      describe(h1) + " vs " + describe(h2));
            IndexSet grown = h1.members() | h2.members();
            Hypothesis h_grown(model.frame(), grown);
            rep.check(survival_plausibility(model, 2, 1, h_grown) >= pl1,
                      "plausibility grows with the hypothesis");
        }
    }

    {
        rep.check(interpret_as_urn_draws(LogWeight(Rational(2))) == 1, "weight two is one draw");
        rep.check(interpret_as_urn_draws(LogWeight(Rational(1024))) == 10,
                  "weight 1024 is ten draws");
        rep.check(interpret_as_urn_draws(LogWeight(Rational(3, 2))) == 1,
                  "weight 3/2 rounds to one draw");
        rep.check(interpret_as_urn_draws(LogWeight(Rational(181, 128))) == 0,
                  "weight just under sqrt(2) rounds down");
        rep.check(interpret_as_urn_draws(LogWeight(Rational(182, 128))) == 1,
                  "weight just over sqrt(2) rounds up");
        BigInt five_e25 = BigInt(5) * boost::multiprecision::pow(BigInt(10), 25);
        rep.check(interpret_as_urn_draws(LogWeight(Rational(five_e25))) == 85,
                  "five times ten to the twenty-fifth is eighty-five draws");
        rep.check_throws<undefined_error>("weight one has no interpretation", [] {
            interpret_as_urn_draws(LogWeight(Rational(1)));
        });
        rep.check_throws<undefined_error>("infinite weight has no interpretation", [] {
            interpret_as_urn_draws(LogWeight::infinity());
        });
    }

    rep.end_suite();
}

void suite_canned_models(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.begin_suite("canned-models");

    // closed forms against the generic engine
    std::int64_t n_cap = ctx.full ? 6 : 5;
    for (std::int64_t n = 1; n <= n_cap; ++n) {
        SurvivalModel model(n);
        auto gfm = model.to_gfm();
        for (std::uint64_t live = 0; live <= 4; ++live) {
            for (std::uint64_t die = 0; die <= 3; ++die) {
                if (live + die == 0) continue;
                std::ostringstream detail;
                detail << "N=" << n << " live=" << live << " die=" << die;
                if (live > 0 && die > 0 && n == 1) {
                    rep.check_throws<undefined_error>("total conflict on both routes " + detail.str(),
                                                      [&] { survival_mass_mixed(model, live, die); });
                    rep.check_throws<undefined_error>("total conflict on generic route " + detail.str(),
                                                      [&] { observe_tally(gfm, survival_tally(live, die)); });
                    continue;
                }
                MassFunction closed =
                    die == 0   ? survival_mass_all_live(model, live)
                    : live == 0 ? survival_mass_all_die(model, die)
                                : survival_mass_mixed(model, live, die);
                CombinationReport generic = observe_tally(gfm, survival_tally(live, die));
                rep.check(closed == generic.result, "closed form equals generic engine",
                          detail.str());
                rep.check(classify(closed) == survival_classification(model, live, die),
                          "structural classification matches", detail.str());
            }
        }
    }

    {
        SurvivalModel four(4);
        MassFunction two_live = survival_mass_all_live(four, 2);
        const std::vector<std::pair<std::int64_t, Rational>> expected = {
            {1, Rational(1, 16)}, {2, Rational(3, 16)}, {3, Rational(5, 16)}, {4, Rational(7, 16)}};
        for (const auto& [lo, mass] : expected) {
            Hypothesis h = make_interval_hypothesis(four.frame(), lo, 4);
            auto it = two_live.focal().find(h.members());
            rep.check(it != two_live.focal().end() && it->second == mass,
                      "two-survivor masses", describe(h));
        }
        MassFunction one_die = survival_mass_all_die(four, 1);
        for (const auto& [set, mass] : one_die.focal()) {
            rep.check(mass == Rational(1, 4), "uniform masses after one death");
            rep.check(set.test(0), "death evidence keeps zero plausible");
        }
    }

    {
        // mass at the top interval grows toward the limit point mass
        SurvivalModel model(5);
        Rational prev;
        bool monotone = true;
        for (std::uint64_t m = 1; m <= 6; ++m) {
            MassFunction mass = survival_mass_all_live(model, m);
            Hypothesis top(model.frame(), std::vector<std::int64_t>{5});
            Rational at_top = belief(mass, top);
            Rational expected = Rational(1) - Rational(4, 5).pow(static_cast<long long>(m));
            rep.check(at_top == expected, "top-interval mass closed form");
            monotone &= at_top > prev;
            prev = at_top;
        }
        rep.check(monotone, "top-interval mass increases with observations");
        MassFunction limit = limit_mass_all_live(model);
        Hypothesis top(model.frame(), std::vector<std::int64_t>{5});
        rep.check(belief(limit, top) == Rational(1), "limit is the certain top");
    }

    // the divergence of the two urn encodings
    for (std::uint64_t m = 1; m <= 5; ++m) {
        GeneralizedFunctionalModel gfm1 =
            ctx.fault ? with_swapped_probabilities(build_urn_gfm1(), 3, 7) : build_urn_gfm1();
        GeneralizedFunctionalModel gfm2 = build_urn_gfm2();
        CombinationReport r1 = observe_tally(gfm1, urn_tally(m, 0));
        CombinationReport r2 = observe_tally(gfm2, urn_tally(m, 0));
        Hypothesis h12(gfm1.theta(), std::vector<std::int64_t>{1, 2});
        Rational pl1 = plausibility(r1.result, h12);
        Rational pl2 = plausibility(r2.result, h12);
        auto e = static_cast<long long>(m);
        Rational expected1 =
            Rational(1, 4).pow(e) + Rational(1, 2).pow(e) - Rational(1, 8).pow(e);
        Rational expected2 = Rational(1, 2).pow(e);
        std::ostringstream detail;
        detail << "m=" << m << " first=" << pl1 << " second=" << pl2;
        rep.check(pl1 == expected1, "first urn plausibility of {1,2}", detail.str());
        rep.check(pl2 == expected2, "second urn plausibility of {1,2}", detail.str());
        rep.check(pl1 != pl2, "the encodings weigh evidence differently", detail.str());
    }

    {
        // printed composite plausibilities, both urn models, against the generic engine
        GeneralizedFunctionalModel gfm1 = build_urn_gfm1();
        GeneralizedFunctionalModel gfm2 = build_urn_gfm2();
        Hypothesis h12(gfm1.theta(), std::vector<std::int64_t>{1, 2});
        Hypothesis h23(gfm1.theta(), std::vector<std::int64_t>{2, 3});
        Hypothesis h13(gfm1.theta(), std::vector<std::int64_t>{1, 3});
        for (std::uint64_t m = 1; m <= 3; ++m) {
            for (std::uint64_t n = 1; n <= 3; ++n) {
                auto em = static_cast<long long>(m);
                auto en = static_cast<long long>(n);
                auto er = static_cast<long long>(m + n);
                CombinationReport r1 = observe_tally(gfm1, urn_tally(m, n));
                Rational c1 = Rational(1) / r1.normalization_constant;
                Rational n12 = Rational(1, 4).pow(em) * Rational(3, 4).pow(en) -
                               Rational(1, 8).pow(em) * Rational(3, 8).pow(en) +
                               Rational(1, 2).pow(er);
                Rational n23 = Rational(1, 4).pow(en) * Rational(3, 4).pow(em) -
                               Rational(1, 8).pow(en) * Rational(3, 8).pow(em) +
                               Rational(1, 2).pow(er);
                Rational n13 = Rational(1, 4).pow(en) * Rational(3, 4).pow(em) +
                               Rational(1, 4).pow(em) * Rational(3, 4).pow(en) -
                               Rational(3, 16).pow(er);
                std::ostringstream detail;
                detail << "m=" << m << " n=" << n;
                rep.check(plausibility(r1.result, h12) == c1 * n12,
                          "first urn printed numerator for {1,2}", detail.str());
                rep.check(plausibility(r1.result, h23) == c1 * n23,
                          "first urn printed numerator for {2,3}", detail.str());
                rep.check(plausibility(r1.result, h13) == c1 * n13,
                          "first urn printed numerator for {1,3}", detail.str());

                CombinationReport r2 = observe_tally(gfm2, urn_tally(m, n));
                Rational c2 = Rational(1) / r2.normalization_constant;
                Rational s12 = Rational(1, 4).pow(em) * Rational(3, 4).pow(en) +
                               Rational(1, 2).pow(en) *
                                   (Rational(1, 2).pow(em) - Rational(1, 4).pow(em));
                Rational s23 = Rational(1, 4).pow(en) * Rational(3, 4).pow(em) +
                               Rational(1, 2).pow(em) *
                                   (Rational(1, 2).pow(en) - Rational(1, 4).pow(en));
                Rational s13 = Rational(1, 4).pow(em) * Rational(3, 4).pow(en) +
                               Rational(1, 4).pow(en) *
                                   (Rational(3, 4).pow(em) - Rational(1, 4).pow(em));
                rep.check(plausibility(r2.result, h12) == c2 * s12,
                          "second urn printed numerator for {1,2}", detail.str());
                rep.check(plausibility(r2.result, h23) == c2 * s23,
                          "second urn printed numerator for {2,3}", detail.str());
                rep.check(plausibility(r2.result, h13) == c2 * s13,
                          "second urn printed numerator for {1,3}", detail.str());
            }
        }
    }

    // the normalizer is symmetric between the two printed sums
    std::int64_t k_n_cap = 12;
    std::uint64_t k_e_cap = 5;
    for (std::int64_t n = 2; n <= k_n_cap; ++n) {
        SurvivalModel model(n);
        for (std::uint64_t m = 1; m <= k_e_cap; ++m) {
            for (std::uint64_t d = 1; d <= k_e_cap; ++d) {
                Rational forward = survival_normalizer(model, m, d);
                Rational swapped;
                {
                    BigInt total;
                    for (std::int64_t l = 1; l <= n; ++l) {
                        BigInt inc = boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(d)) -
                                     boost::multiprecision::pow(BigInt(l - 1), static_cast<unsigned>(d));
                        total += inc * boost::multiprecision::pow(BigInt(n - l), static_cast<unsigned>(m));
                    }
                    swapped = Rational(total);
                }
                std::ostringstream detail;
                detail << "N=" << n << " m=" << m << " n=" << d;
                rep.check(forward == swapped, "normalizer is the same in both printed forms",
                          detail.str());
            }
        }
    }

    // singleton plausibility closed form under a mixed record
    {
        SurvivalModel model(6);
        Rational k = survival_normalizer(model, 2, 2);
        for (std::int64_t theta = 0; theta <= 6; ++theta) {
            Hypothesis h(model.frame(), std::vector<std::int64_t>{theta});
            Rational expected =
                Rational(BigInt(theta) * BigInt(theta) * BigInt(6 - theta) * BigInt(6 - theta)) / k;
            rep.check(survival_plausibility(model, 2, 2, h) == expected,
                      "singleton plausibility closed form", "theta=" + std::to_string(theta));
        }
    }

    // run decomposition against the materialized mass function, every subset
    {
        SurvivalModel model(6);
        MassFunction mixed = survival_mass_mixed(model, 2, 2);
        for (std::uint64_t bits = 1; bits < 128; ++bits) {
            Hypothesis h(model.frame(), IndexSet(7, bits));
            Rational direct = plausibility(mixed, h);
            Rational closed = survival_plausibility(model, 2, 2, h);
            rep.check(direct == closed, "closed plausibility on arbitrary sets", describe(h));
        }
    }

    // interval identity and its boundary equalities
    std::int64_t id_cap = ctx.full ? 7 : 6;
    for (std::int64_t n = 2; n <= id_cap; ++n) {
        SurvivalModel model(n);
        for (std::uint64_t m = 1; m <= 3; ++m) {
            for (std::uint64_t d = 1; d <= 3; ++d) {
                MassFunction mixed = survival_mass_mixed(model, m, d);
                for (std::int64_t r = 0; r <= n; ++r) {
                    for (std::int64_t s = r; s <= n; ++s) {
                        Rational closed = survival_plausibility_interval(model, m, d, r, s);
                        Rational direct =
                            plausibility(mixed, make_interval_hypothesis(model.frame(), r, s));
                        std::ostringstream detail;
                        detail << "N=" << n << " m=" << m << " n=" << d << " [" << r << ".." << s
                               << "]";
                        rep.check(closed == direct, "interval plausibility closed form",
                                  detail.str());
                        if (r >= 1) {
                            Rational via_identity =
                                survival_plausibility_interval(model, m, d, 1, s) +
                                survival_plausibility_interval(model, m, d, r, n) - Rational(1);
                            rep.check(closed == via_identity, "prefix-suffix interval identity",
                                      detail.str());
                        }
                    }
                }
                for (std::int64_t r = 1; r <= n; ++r) {
                    rep.check(survival_plausibility_interval(model, m, d, 0, r) ==
                                  survival_plausibility_interval(model, m, d, 1, r),
                              "zero and one share a lower boundary");
                    if (r <= n - 1) {
                        rep.check(survival_plausibility_interval(model, m, d, r, n) ==
                                      survival_plausibility_interval(model, m, d, r, n - 1),
                                  "top survivors drop out of mixed evidence");
                    }
                }
            }
        }
    }

    // transition matrix: stochastic, advances the mass vector, eigenpower
    std::int64_t t_cap = 12;
    for (std::int64_t n = 1; n <= t_cap; ++n) {
        TransitionMatrix t = build_transition_matrix(n);
        rep.check(t.is_column_stochastic(), "transition matrix is column stochastic",
                  "N=" + std::to_string(n));
        SurvivalModel model(n);
        std::vector<Rational> vec = survival_mass_vector(model, 1);
        for (std::uint64_t m = 2; m <= 6; ++m) {
            vec = t.apply(vec);
            rep.check(vec == survival_mass_vector(model, m),
                      "transition advances the mass vector",
                      "N=" + std::to_string(n) + " m=" + std::to_string(m));
        }
        RationalMatrix power = RationalMatrix::identity(static_cast<std::size_t>(n));
        for (std::uint64_t k = 0; k <= 6; ++k) {
            rep.check(jordan_power(n, k) == power, "eigendecomposition power matches",
                      "N=" + std::to_string(n) + " k=" + std::to_string(k));
            power = power * t.matrix();
        }
    }

    {
        TransitionMatrix two = build_transition_matrix(2);
        bool shape = two.matrix().at(0, 0) == Rational(1, 2) &&
                     two.matrix().at(1, 0) == Rational(1, 2) &&
                     two.matrix().at(0, 1).is_zero() && two.matrix().at(1, 1) == Rational(1);
        rep.check(shape, "two-person transition matrix entries");
    }

    // closed weight equals the generic weight on arbitrary pairs
    {
        SurvivalModel model(5);
        auto gfm = model.to_gfm();
        CombinationReport report = observe_tally(gfm, survival_tally(2, 1));
        std::uniform_int_distribution<std::uint64_t> bits(1, 63);
        int rounds = ctx.full ? 150 : 60;
        for (int i = 0; i < rounds; ++i) {
            Hypothesis h1(model.frame(), IndexSet(6, bits(ctx.rng)));
            Hypothesis h2(model.frame(), IndexSet(6, bits(ctx.rng)));
            LogWeight closed = LogWeight(Rational(0));
            LogWeight generic = LogWeight(Rational(0));
            bool closed_defined = true;
            bool generic_defined = true;
            try {
                closed = survival_weight(model, 2, 1, h1, h2);
            } catch (const undefined_error&) {
                closed_defined = false;
            }
            try {
                generic = weight(report.result, h1, h2);
            } catch (const undefined_error&) {
                generic_defined = false;
            }
            rep.check(closed_defined == generic_defined &&
                          (!closed_defined || closed == generic),
                      "closed weight equals generic weight",
                      describe(h1) + " vs " + describe(h2));
        }
    }

    rep.end_suite();
}

void suite_cli(Context& ctx) {
    Reporter& rep = ctx.rep;
    rep.begin_suite("cli");

    // hypothesis grammar round-trips
    int rounds = ctx.full ? 400 : 120;
    std::uniform_int_distribution<std::int64_t> hi_dist(1, 12);
    for (int i = 0; i < rounds; ++i) {
        Frame frame = Frame::integer_range(0, hi_dist(ctx.rng));
        Hypothesis h(frame, random_subset(ctx.rng, frame.size(), true));
        Hypothesis back = parse_hypothesis(format_hypothesis(h), frame);
        rep.check(back == h, "hypothesis expression round-trip", format_hypothesis(h));

        // explicit brace form regardless of shape
        std::string braces = "{";
        bool first = true;
        for (auto label : h.member_labels()) {
            if (!first) braces += ",";
            braces += std::to_string(label);
            first = false;
        }
        braces += "}";
        rep.check(parse_hypothesis(braces, frame) == h, "brace expression parses", braces);
    }

    {
        Frame frame = Frame::integer_range(0, 10);
        rep.check(parse_hypothesis("[2..5]", frame) == make_interval_hypothesis(frame, 2, 5),
                  "interval expression parses");
        rep.check(parse_hypothesis(">=2/5", frame) ==
                      make_rate_hypothesis(frame, Rational(2, 5), RateDirection::at_least),
                  "at-least rate expression parses");
        rep.check(parse_hypothesis("=1/2", frame) ==
                      make_rate_hypothesis(frame, Rational(1, 2), RateDirection::exactly),
                  "exact rate expression parses");
        rep.check(parse_hypothesis(">=1", frame).member_labels() ==
                      std::vector<std::int64_t>{10},
                  "rate one picks the top");
        for (const std::string& bad :
             {"", "{}", "{1,}", "{,1}", "[1..]", "[..2]", "[1.2]", ">=", "=", "{a}", "(1,2)",
              "1,2", "{1 2}", ">=1/3"}) {
            rep.check_throws<input_error>("bad expression rejected: '" + bad + "'",
                                          [&] { parse_hypothesis(bad, frame); });
        }
    }

    // exact weights round-trip through their printed form
    int weight_rounds = ctx.full ? 300 : 80;
    for (int i = 0; i < weight_rounds; ++i) {
        Rational q = random_rational(ctx.rng);
        if (q.sign() < 0) q = -q;
        LogWeight w(q);
        rep.check(Rational::parse(w.to_string()) == q, "printed weight re-parses", w.to_string());
    }

    rep.end_suite();
}

} // namespace

int run_verify(const VerifyOptions& opts, std::ostream& out) {
    Reporter rep(out);
    Context ctx{rep, opts.full_grid, opts.inject_fault, std::mt19937_64(20260817)};

    suite_frames(ctx);
    suite_belief_core(ctx);
    suite_gfm(ctx);
    suite_evidence(ctx);
    suite_canned_models(ctx);
    suite_cli(ctx);

    if (rep.all_passed()) {
        out << "all suites passed\n";
        return 0;
    }
    out << "verification failed\n";
    return 1;
}

} // namespace evw::cli
