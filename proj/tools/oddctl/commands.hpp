#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace odd::cli {

/// Process exit status of `oddctl`.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,       // bad flags, unreadable or unwritable files
  kValidationError = 2,  // invalid taxonomy, spec, LOD or trace
  kExitDetected = 3,     // monitor saw an ODD exit and --fail-on-exit was given
};

/// Runs `oddctl` with the given argv. Results go to `out`, diagnostics to
/// `err`; nothing touches the process-wide streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace odd::cli
