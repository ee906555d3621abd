#pragma once

namespace dslv::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1, ///< a verification suite ran and reported FAIL
    kUsage = 2,       ///< bad flags or invalid problem data
    kNumeric = 3      ///< a numeric routine could not deliver its result
};

int run(int argc, const char* const* argv);

} // namespace dslv::cli
