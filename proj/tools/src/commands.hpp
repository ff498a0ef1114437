#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stpq::cli {

/// Exit codes, stable across releases.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

/// Parses and executes one command line (program name excluded). Results go
/// to `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace stpq::cli
