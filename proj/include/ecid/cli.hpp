#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ecid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitHypothesis = 4;

inline constexpr const char* kVersion = "1.0.0";

/// Runs one command line (without the program name). Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecid::cli
