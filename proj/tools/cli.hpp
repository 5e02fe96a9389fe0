#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biquotient::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kMismatch = 2 };

// Runs the command line tool. Documents go to `out` (or the --out file),
// diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace biquotient::cli
