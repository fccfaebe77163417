#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitVerification = 4;

inline constexpr int kSchemaVersion = 1;

/// Runs one command line (without the program name). Output goes to out or
/// to the --out file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apsum::cli
