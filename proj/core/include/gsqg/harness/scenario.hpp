#pragma once

#include <exception>
#include <iosfwd>
#include <string>

#include "gsqg/harness/config.hpp"

namespace gsqg::harness {

/// Process exit status of a scenario run.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,         // bad flags or invalid configuration
  kExitIo = 2,            // unreadable/unwritable files, malformed checkpoint
  kExitBlowUp = 3,        // non-finite state
  kExitCfl = 4,           // Courant number above the limit
  kExitOverflow = 5,      // Gevrey weight exceeds the overflow guard
  kExitVerification = 6,  // oracle mismatch, inequality or invariant violation
  kExitPicard = 7,        // Picard iteration did not converge
};

struct RunOptions {
  /// Write the final state (simulate) here; periodic checkpoints go next to it.
  std::string checkpoint;
  /// Continue a simulate run from this checkpoint up to the configured T.
  std::string resume;
};

/// Runs one scenario, writing CSVs and summary.txt under config.out_dir.
/// Errors are reported on `log` and mapped to an ExitCode.
int run_scenario(const ScenarioConfig& config, const RunOptions& options, std::ostream& log);

/// ExitCode for an exception thrown by the library.
int exit_code_for(const std::exception& e);

}  // namespace gsqg::harness
