#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wafomlab::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,   // I/O and anything unclassified
  kUsage = 2,     // bad flags, malformed input files, out-of-domain values
  kInvariant = 3, // rank or shape violations
  kCapacity = 4,  // enumeration above the configured cap
};

/// Runs the command line `args` (program name excluded). Normal output goes to
/// `out`, diagnostics to `err`. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wafomlab::cli
