#pragma once

#include <iosfwd>

namespace evw::cli {

// Full command-line entry point: parses argv, dispatches, writes reports to
// out and diagnostics to err. Returns the process exit code: 0 success,
// 1 verification failure, 2 input error, 3 undefined result.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace evw::cli
