#pragma once

#include <ostream>

namespace rtnn {

// Exit codes of the rtnn tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAuditFailed = 1;
inline constexpr int kExitBadRank = 2;
inline constexpr int kExitParamCount = 3;
inline constexpr int kExitZeroParam = 4;
inline constexpr int kExitParse = 5;
inline constexpr int kExitSingular = 6;

/// Entry point of the command-line tool; JSON goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rtnn
