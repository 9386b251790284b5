#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace folia::cli {

// Runs one CLI invocation.  JSON result on `out`, diagnostics on `err`.
// Exit codes: 0 = a result was computed (any verdict), 2 = usage or input
// error, 3 = internal invariant failure (including selfcheck failures).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace folia::cli
