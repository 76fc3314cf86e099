#pragma once

#include <iosfwd>

namespace sandcoh {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAxiomFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNotConverged = 3;

/// Entry point of the `sandcoh` tool. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sandcoh
