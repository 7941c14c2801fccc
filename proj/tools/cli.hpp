// The prodfree command-line driver. Exit codes: 0 success / property holds,
// 1 property fails (witness or violation found), 2 usage or I/O error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prodfree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitError = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prodfree::cli
