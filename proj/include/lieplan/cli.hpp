#pragma once

#include <ostream>

namespace lieplan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOracleDisagree = 1;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitPrecondition = 3;

/// Entry point of the `lieplan` tool: parses argv, dispatches the
/// subcommand, writes the report to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lieplan
