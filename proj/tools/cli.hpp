#pragma once

#include <iosfwd>

namespace dfadist::cli {

/// Exit codes shared by every subcommand.
enum ExitStatus : int {
  kTrue = 0,   // success, found, true
  kFalse = 1,  // none, unsat, false
  kError = 2,  // usage or input error
};

/// Runs one `dfadist` invocation. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dfadist::cli
