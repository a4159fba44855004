#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hns::cli {

/// Runs one CLI invocation (without the program name). Results go to `out`
/// as single-line JSON; human-readable diagnostics go to `err`.
/// Exit codes: 0 success, 1 domain error (non-unital system, non-positive
/// discriminant, failed verification, ...), 2 parse or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hns::cli
