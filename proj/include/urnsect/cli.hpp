#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace urnsect::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs the `urnsect` command line. `args` excludes the program name.
/// Returns 0 on success, 1 on usage or parameter errors, 2 on data errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace urnsect::cli
