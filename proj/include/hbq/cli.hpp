#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbq {

/// Exit codes: 0 ok, 1 validation or fixture failure, 2 usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `hbq` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbq
