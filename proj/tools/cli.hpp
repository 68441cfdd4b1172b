#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbirk::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kViolation = 2, kGuard = 3 };

/// args excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cbirk::cli
