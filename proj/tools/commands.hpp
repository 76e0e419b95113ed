// Subcommands of the tauslice tool and the JSON report they emit.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tauslice::cli {

// 0 certified true, 1 certified false, 2 inconclusive, 3 input error.
enum ExitCode : int { exit_true = 0, exit_false = 1, exit_inconclusive = 2, exit_input_error = 3 };

inline constexpr const char* kReportSchema = "tauslice-report/1";
inline constexpr unsigned kRecordedSeed = 0x5eed;

/// args excludes the program name. The report goes to out (or --out), diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tauslice::cli
