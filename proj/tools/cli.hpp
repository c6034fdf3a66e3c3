#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace taskgroup::cli {

/// Runs the command-line surface. `args` excludes the program name.
/// Exit codes: 0 success, 1 infeasible instance, 2 usage or validation
/// error, 3 internal failure (including a failed oracle certification).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taskgroup::cli
