#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace finitea::cli {

/// Runs the command line (args excludes the program name). Exit codes:
/// 0 all checks pass, 1 some check failed, 2 malformed arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finitea::cli
