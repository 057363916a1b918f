#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace grothsp::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kMalformedInput = 2,
  kCapacityExceeded = 3,
};

/// Parses `args` (without the program name) and runs one subcommand.
/// The report goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grothsp::cli
