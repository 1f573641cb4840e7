#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zerosum::cli {

/// Exit codes: 0 claim verified / value computed, 1 witness or counterexample found,
/// 2 usage, input or budget error.
enum ExitCode : int { kOk = 0, kFound = 1, kUsage = 2 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zerosum::cli
