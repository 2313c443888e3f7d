#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace unitsum::cli {

// Exit codes. Solve maps outcome classes onto 0/3/4/5; verify reports an
// invalid grid with kInvalid as well.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kUnderdetermined = 3;
inline constexpr int kInconsistent = 4;
inline constexpr int kInvalid = 5;

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unitsum::cli
