#include "commands.hpp"

#include <evw/error.hpp>
#include <evw/evidence.hpp>
#include <evw/hypothesis_expr.hpp>
#include <evw/json_io.hpp>
#include <evw/log_weight.hpp>
#include <evw/models.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <utility>

namespace evw::cli {

namespace {

using nlohmann::json;

std::string format_log10(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << value;
    return os.str();
}

json log10_json(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    return value;
}

std::uint64_t parse_count(std::string_view text, std::string_view whole) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw input_error("invalid tally entry '" + std::string(whole) + "', expected label=count");
    }
    return value;
}

// Per-outcome counts for the survival engine; anything but live/die is an error.
std::pair<std::uint64_t, std::uint64_t> survival_counts(const ObservationTally& tally) {
    std::uint64_t live = 0;
    std::uint64_t die = 0;
    for (const auto& [label, count] : tally.counts()) {
        if (label == "live") {
            live = count;
        } else if (label == "die") {
            die = count;
        } else if (count > 0) {
            throw input_error("unknown outcome label '" + label + "'");
        }
    }
    if (live == 0 && die == 0) throw input_error("empty observation tally");
    return {live, die};
}

struct FocalRow {
    std::vector<std::int64_t> labels;
    std::string rendered;
    Rational mass;
};

std::vector<FocalRow> focal_rows(const MassFunction& m) {
    std::vector<FocalRow> rows;
    rows.reserve(m.focal_count());
    for (const auto& [set, mass] : m.focal()) {
        FocalRow row;
        for (auto i = set.find_first(); i != IndexSet::npos; i = set.find_next(i)) {
            row.labels.push_back(m.frame().label_at(i));
        }
        row.rendered = format_index_set(set, m.frame());
        row.mass = mass;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const FocalRow& a, const FocalRow& b) { return a.labels < b.labels; });
    return rows;
}

} // namespace

ResolvedModel resolve_model(const std::string& reference) {
    if (reference == "urn-gfm1") {
        auto model = build_urn_gfm1();
        Frame frame = model.theta();
        return ResolvedModel{reference, std::move(frame), std::move(model), std::nullopt};
    }
    if (reference == "urn-gfm2") {
        auto model = build_urn_gfm2();
        Frame frame = model.theta();
        return ResolvedModel{reference, std::move(frame), std::move(model), std::nullopt};
    }
    if (reference.starts_with("survival:")) {
        std::string_view digits = std::string_view(reference).substr(9);
        std::int64_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || n < 1) {
            throw input_error("invalid model reference '" + reference + "', expected survival:N with N >= 1");
        }
        SurvivalModel model(n);
        return ResolvedModel{reference, model.frame(), std::nullopt, n};
    }
    auto model = gfm_from_json_file(reference);
    Frame frame = model.theta();
    return ResolvedModel{reference, std::move(frame), std::move(model), std::nullopt};
}

ObservationTally build_tally(const std::vector<std::string>& pairs,
                             std::uint64_t live, std::uint64_t die) {
    ObservationTally tally;
    for (const auto& item : pairs) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw input_error("invalid tally entry '" + item + "', expected label=count");
        }
        tally.add(item.substr(0, eq), parse_count(std::string_view(item).substr(eq + 1), item));
    }
    if (live > 0) tally.add("live", live);
    if (die > 0) tally.add("die", die);
    return tally;
}

int cmd_weigh(const WeighOptions& opts, std::ostream& out) {
    ResolvedModel model = resolve_model(opts.model);
    ObservationTally tally = build_tally(opts.tally, opts.live, opts.die);
    Hypothesis h = parse_hypothesis(opts.h, model.frame);
    Hypothesis h2 = parse_hypothesis(opts.h2, model.frame);

    LogWeight w = LogWeight(Rational(0));
    Classification cls = Classification::general;
    if (model.survival_population) {
        SurvivalModel survival(*model.survival_population);
        auto [live, die] = survival_counts(tally);
        w = survival_weight(survival, live, die, h, h2);
        cls = survival_classification(survival, live, die);
    } else {
        CombinationReport report = observe_tally(*model.gfm, tally, opts.max_focal);
        w = weight(report.result, h, h2);
        cls = classify(report.result);
    }

    if (opts.json) {
        json root{{"weight", w.to_string()},
                  {"log10", log10_json(w.log10())},
                  {"classification", std::string(to_string(cls))}};
        out << root.dump(2) << "\n";
    } else {
        out << "weight = " << w.to_string() << "\n";
        out << "log10 = " << format_log10(w.log10()) << "\n";
        out << "classification = " << to_string(cls) << "\n";
    }
    return 0;
}

int cmd_focal(const FocalOptions& opts, std::ostream& out) {
    ResolvedModel model = resolve_model(opts.model);
    ObservationTally tally = build_tally(opts.tally, opts.live, opts.die);

    MassFunction mass = MassFunction::vacuous(model.frame);
    if (model.survival_population) {
        SurvivalModel survival(*model.survival_population);
        auto [live, die] = survival_counts(tally);
        if (die == 0) {
            mass = survival_mass_all_live(survival, live);
        } else if (live == 0) {
            mass = survival_mass_all_die(survival, die);
        } else {
            mass = survival_mass_mixed(survival, live, die);
        }
    } else {
        mass = observe_tally(*model.gfm, tally, opts.max_focal).result;
    }

    auto rows = focal_rows(mass);
    if (opts.json) {
        json focal = json::array();
        for (const auto& row : rows) {
            focal.push_back(json{{"set", row.labels}, {"mass", row.mass.to_string()}});
        }
        json root{{"frame", mass.frame().labels()}, {"focal", std::move(focal)}};
        out << root.dump(2) << "\n";
    } else {
        for (const auto& row : rows) {
            out << row.rendered << "  " << row.mass << "\n";
        }
    }
    return 0;
}

int cmd_scan_n(const ScanOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.step < 1) throw input_error("step must be positive");
    if (opts.from < 1 || opts.to < opts.from) throw input_error("invalid N range");
    if (opts.live == 0 && opts.die == 0) throw input_error("empty observation tally");

    auto h_rate = parse_rate_expression(opts.h);
    auto h2_rate = parse_rate_expression(opts.h2);
    if (!h_rate || !h2_rate) {
        throw input_error("scan-n requires rate hypotheses (>=p/q or =p/q)");
    }

    auto misaligned = [](const Rational& rate, std::int64_t n) -> std::optional<std::int64_t> {
        auto q = rate.denominator().convert_to<std::int64_t>();
        if (n % q != 0) return q;
        return std::nullopt;
    };

    json rows = json::array();
    bool any = false;
    bool have_prev = false;
    double prev_log10 = 0.0;
    for (std::int64_t n = opts.from; n <= opts.to; n += opts.step) {
        std::optional<std::int64_t> bad = misaligned(h_rate->rate, n);
        if (!bad) bad = misaligned(h2_rate->rate, n);
        if (bad) {
            err << "warning: " << n << " not divisible by " << *bad << ", skipped\n";
            continue;
        }
        SurvivalModel model(n);
        Hypothesis h = make_rate_hypothesis(model.frame(), h_rate->rate, h_rate->direction);
        Hypothesis h2 = make_rate_hypothesis(model.frame(), h2_rate->rate, h2_rate->direction);
        LogWeight w = survival_weight(model, opts.live, opts.die, h, h2);
        double lg = w.log10();
        bool plateau = have_prev && std::abs(lg - prev_log10) < 0.01;
        if (opts.json) {
            rows.push_back(json{{"n", n},
                                {"weight", w.to_string()},
                                {"log10", log10_json(lg)},
                                {"plateau", plateau}});
        } else {
            out << "N=" << n << " log10=" << format_log10(lg) << (plateau ? " plateau" : "") << "\n";
        }
        prev_log10 = lg;
        have_prev = true;
        any = true;
    }
    if (!any) {
        err << "error: every N in the range misses the rate denominators\n";
        return 2;
    }
    if (opts.json) {
        out << json{{"rows", std::move(rows)}}.dump(2) << "\n";
    }
    return 0;
}

int cmd_interpret(const InterpretOptions& opts, std::ostream& out) {
    if (opts.weight.has_value() == opts.log10.has_value()) {
        throw input_error("give exactly one of --weight or --log10");
    }
    std::int64_t draws = 0;
    if (opts.weight) {
        draws = interpret_as_urn_draws(LogWeight(Rational::parse(*opts.weight)));
    } else {
        double x = *opts.log10;
        if (!std::isfinite(x) || x <= 0.0) {
            throw undefined_error("no supporting interpretation for log10 " + format_log10(x));
        }
        // Nearest integer to x / log10(2), ties rounded down.
        draws = static_cast<std::int64_t>(std::ceil(x / std::log10(2.0) - 0.5));
    }
    if (opts.json) {
        out << json{{"draws", draws}}.dump(2) << "\n";
    } else {
        out << "draws = " << draws << "\n";
        out << "equivalent to " << draws << " consecutive white draws (WW vs BW)\n";
    }
    return 0;
}

} // namespace evw::cli
