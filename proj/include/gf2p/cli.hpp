#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gf2p {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitVerdictFail = 1, kExitUsage = 2, kExitInternal = 3 };

/// Runs the gf2p command line. args[0] is the program name. Output goes to
/// `out` (or to --out FILE), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gf2p
