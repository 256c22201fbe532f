#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extcalc {

// Runs one extcalc command line (without the program name) and writes the
// result document to `out` and diagnostics to `err`.
//
// Commands: ext, generators, bounds, verify.  The EXTCALC_CONFIG environment
// variable may point to a key=value file supplying defaults for any long
// option; explicit flags win.
//
// Exit codes: 0 success, 1 verification failure, 2 unsupported functor pair,
// 3 parse or parameter error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace extcalc
