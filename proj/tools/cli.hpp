#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace palatum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalid = 2;

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` when `--out -` selects standard output; diagnostics go to `err` as
/// single lines of the form "error: <code>: <detail>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace palatum::cli
