#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctqw::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kParseError = 2,
    kUnsupportedGate = 3,
    kDimensionMismatch = 4,
};

/// Runs one command line. Data goes to out (or --out files), diagnostics to
/// err. Log verbosity comes from CTQW_LOG_LEVEL (quiet, info, debug).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ctqw::cli
