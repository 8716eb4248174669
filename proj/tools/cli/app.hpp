#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrep::cli {

/// Exit statuses of the mrep tool.
enum ExitCode : int {
  kOk = 0,
  kNotEqual = 1,
  kParseError = 2,
  kDimensionError = 3,
  kCapExceeded = 4,
};

/// Runs the command line (without the program name). Results go to `out`
/// unless a subcommand writes a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mrep::cli
