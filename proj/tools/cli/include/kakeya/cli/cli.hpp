#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kakeya::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kakeya::cli
