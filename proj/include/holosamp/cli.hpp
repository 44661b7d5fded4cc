#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace holosamp::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kNumericalError = 3 };

// Entry point of the holosamp tool.  Data go to `out` unless -o is given;
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holosamp::cli
