#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotloc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kRejected = 2, kInexact = 3 };

/// Runs one knotloc command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotloc::cli
