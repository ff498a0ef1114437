#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stpq::cli {

/// Names accepted by `stpq verify --suite`.
std::vector<std::string> suite_names();

/// Runs one named property suite, printing one line per check; returns
/// false when any check fails. Unknown names throw DomainError.
bool run_suite(const std::string& name, std::ostream& out);

} // namespace stpq::cli
