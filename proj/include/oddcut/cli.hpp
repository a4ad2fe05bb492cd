#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddcut {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 ok, 1 infeasible, 2 parse or usage error, 3 other failure.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace oddcut
