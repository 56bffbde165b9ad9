#pragma once

#include <iosfwd>

namespace absarith {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitDomain = 3, kExitCap = 4 };

/// Runs one command line; JSON or CSV goes to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace absarith
