#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fixcode::cli {

enum ExitCode : int { kVerified = 0, kRefuted = 1, kUsageOrResource = 2 };

/// Runs the `fixcode` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fixcode::cli
