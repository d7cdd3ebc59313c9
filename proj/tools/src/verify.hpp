#pragma once

#include <iosfwd>

namespace evw::cli {

struct VerifyOptions {
    bool full_grid = false;
    bool inject_fault = false;  // deliberately corrupt a built-in, for testing the harness
};

// Runs every module's invariant suite. Prints per-suite pass counts, plus the
// counterexample for any failing check. Returns 0 when everything passes,
// 1 otherwise.
int run_verify(const VerifyOptions& opts, std::ostream& out);

} // namespace evw::cli
