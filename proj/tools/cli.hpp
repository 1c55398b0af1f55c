#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uavg::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kInvariantViolation = 3 };

/// Runs one invocation; \p args excludes the program name. Results go to
/// \p out (or --output), errors to \p err as a JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uavg::cli
