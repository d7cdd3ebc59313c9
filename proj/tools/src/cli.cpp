#include <evw/cli.hpp>

#include "commands.hpp"
#include "verify.hpp"

#include <evw/error.hpp>
#include <evw/mass_function.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace evw::cli {

namespace {

std::optional<std::size_t> read_focal_limit(std::string* problem) {
    const char* raw = std::getenv("EVW_MAX_FOCAL");
    if (raw == nullptr || *raw == '\0') return std::size_t{1'000'000};
    std::uint64_t value = 0;
    const char* end = raw + std::string_view(raw).size();
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
        *problem = raw;
        return std::nullopt;
    }
    return static_cast<std::size_t>(value);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact weights of evidence for belief-function models"};
    app.name("evw");
    app.require_subcommand(1);

    std::string limit_problem;
    std::optional<std::size_t> max_focal = read_focal_limit(&limit_problem);
    if (!max_focal) {
        err << "error: EVW_MAX_FOCAL must be a positive integer, got '" << limit_problem
            << "'\n";
        return 2;
    }

    WeighOptions weigh;
    weigh.max_focal = *max_focal;
    auto* weigh_cmd = app.add_subcommand("weigh", "weigh one hypothesis against another");
    weigh_cmd->set_help_flag("--help", "print help");
    weigh_cmd->add_option("--model", weigh.model, "built-in model name or JSON file")->required();
    weigh_cmd->add_option("--tally", weigh.tally, "observation counts as label=count");
    weigh_cmd->add_option("--live", weigh.live, "survivors observed");
    weigh_cmd->add_option("--die", weigh.die, "deaths observed");
    weigh_cmd->add_option("--h", weigh.h, "hypothesis under test")->required();
    weigh_cmd->add_option("--h2", weigh.h2, "reference hypothesis")->required();
    weigh_cmd->add_flag("--json", weigh.json, "machine-readable output");

    FocalOptions focal;
    focal.max_focal = *max_focal;
    auto* focal_cmd = app.add_subcommand("focal", "list focal sets of the combined evidence");
    focal_cmd->add_option("--model", focal.model, "built-in model name or JSON file")->required();
    focal_cmd->add_option("--tally", focal.tally, "observation counts as label=count");
    focal_cmd->add_option("--live", focal.live, "survivors observed");
    focal_cmd->add_option("--die", focal.die, "deaths observed");
    focal_cmd->add_flag("--json", focal.json, "machine-readable output");

    ScanOptions scan;
    auto* scan_cmd = app.add_subcommand("scan-n", "sweep the survival population size");
    scan_cmd->set_help_flag("--help", "print help");
    scan_cmd->add_option("--live", scan.live, "survivors observed");
    scan_cmd->add_option("--die", scan.die, "deaths observed");
    scan_cmd->add_option("--h", scan.h, "hypothesis under test (rate form)");
    scan_cmd->add_option("--h2", scan.h2, "reference hypothesis (rate form)");
    scan_cmd->add_option("--from", scan.from, "first population size")->required();
    scan_cmd->add_option("--to", scan.to, "last population size")->required();
    scan_cmd->add_option("--step", scan.step, "population increment");
    scan_cmd->add_flag("--json", scan.json, "machine-readable output");

    InterpretOptions interpret;
    auto* interpret_cmd =
        app.add_subcommand("interpret", "restate a weight as consecutive urn draws");
    std::string weight_text;
    double log10_value = 0.0;
    auto* weight_opt = interpret_cmd->add_option("--weight", weight_text, "exact weight");
    auto* log10_opt = interpret_cmd->add_option("--log10", log10_value, "base-ten log weight");
    interpret_cmd->add_flag("--json", interpret.json, "machine-readable output");

    VerifyOptions verify;
    std::string grid = "small";
    auto* verify_cmd = app.add_subcommand("verify", "run the built-in self checks");
    verify_cmd->add_option("--grid", grid, "check volume")
        ->check(CLI::IsMember({"small", "full"}));
    verify_cmd->add_flag("--inject-fault", verify.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (weigh_cmd->parsed()) return cmd_weigh(weigh, out);
        if (focal_cmd->parsed()) return cmd_focal(focal, out);
        if (scan_cmd->parsed()) return cmd_scan_n(scan, out, err);
        if (interpret_cmd->parsed()) {
            if (weight_opt->count() > 0) interpret.weight = weight_text;
            if (log10_opt->count() > 0) interpret.log10 = log10_value;
            return cmd_interpret(interpret, out);
        }
        if (verify_cmd->parsed()) {
            verify.full_grid = grid == "full";
            return run_verify(verify, out);
        }
    } catch (const focal_limit_error& e) {
        err << "error: " << e.what() << "\n";
        err << "hint: use a canned model (survival:N) for large frames, or raise EVW_MAX_FOCAL\n";
        return 2;
    } catch (const undefined_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace evw::cli
