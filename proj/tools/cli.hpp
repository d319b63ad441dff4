#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bandet::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage = 2, guard = 3 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bandet::cli
