#pragma once

#include <evw/frame.hpp>
#include <evw/gfm.hpp>
#include <evw/mass_function.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace evw::cli {

// A model named on the command line: a built-in urn, survival:N (closed-form
// engine, no functional model materialized), or a JSON file path.
struct ResolvedModel {
    std::string name;
    Frame frame;
    std::optional<GeneralizedFunctionalModel> gfm;
    std::optional<std::int64_t> survival_population;
};

ResolvedModel resolve_model(const std::string& reference);

// Merges --tally label=count pairs with the --live / --die shorthands.
ObservationTally build_tally(const std::vector<std::string>& pairs,
                             std::uint64_t live, std::uint64_t die);

struct WeighOptions {
    std::string model;
    std::vector<std::string> tally;
    std::uint64_t live = 0;
    std::uint64_t die = 0;
    std::string h;
    std::string h2;
    bool json = false;
    std::size_t max_focal = kNoFocalLimit;
};
int cmd_weigh(const WeighOptions& opts, std::ostream& out);

struct FocalOptions {
    std::string model;
    std::vector<std::string> tally;
    std::uint64_t live = 0;
    std::uint64_t die = 0;
    bool json = false;
    std::size_t max_focal = kNoFocalLimit;
};
int cmd_focal(const FocalOptions& opts, std::ostream& out);

struct ScanOptions {
    std::uint64_t live = 0;
    std::uint64_t die = 0;
    std::string h = ">=4/5";
    std::string h2 = "=1/5";
    std::int64_t from = 0;
    std::int64_t to = 0;
    std::int64_t step = 1;
    bool json = false;
};
int cmd_scan_n(const ScanOptions& opts, std::ostream& out, std::ostream& err);

struct InterpretOptions {
    std::optional<std::string> weight;
    std::optional<double> log10;
    bool json = false;
};
int cmd_interpret(const InterpretOptions& opts, std::ostream& out);

} // namespace evw::cli
