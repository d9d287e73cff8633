#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace richardson {

/// Exit codes: 0 ok, 1 verification failure, 2 usage or input error.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/// Entry point shared by the executable and the tests. args excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace richardson
