#pragma once

#include "evw/gfm.hpp"
#include "evw/mass_function.hpp"

#include <string>
#include <string_view>

namespace evw {

// Mass-function schema:
//   {"frame": [labels...],
//    "focal": [{"set": [labels...], "mass": "p/q"}, ...]}
// Masses are exact rational strings; integers may drop the "/1".
std::string to_json_text(const MassFunction& m);
MassFunction mass_function_from_json_text(std::string_view text);
MassFunction mass_function_from_json_file(const std::string& path);

// Functional-model schema:
//   {"theta": [labels...],
//    "omega": [names...],
//    "outcomes": [names...],
//    "p_omega": {name: "p/q", ...},
//    "f": {"<theta>,<omega>": outcome, ...}}
// f must cover every (theta, omega) pair; p_omega must sum to 1.
std::string to_json_text(const GeneralizedFunctionalModel& model);
GeneralizedFunctionalModel gfm_from_json_text(std::string_view text);
GeneralizedFunctionalModel gfm_from_json_file(const std::string& path);

} // namespace evw
