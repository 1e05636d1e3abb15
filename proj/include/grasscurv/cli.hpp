#pragma once

#include <ostream>

namespace grasscurv::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kDataError = 3,
};

/// Runs `grasscurv <subcommand> ...`; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grasscurv::cli
