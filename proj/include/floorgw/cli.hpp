#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace floorgw::cli {

/// Exit codes: 0 success (or verified identity), 1 domain error or failed
/// identity, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the worker count for enumeration.
inline constexpr const char* kWorkersEnv = "FLOORGW_WORKERS";

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace floorgw::cli
