#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hadwiger::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitAnomaly = 2;

/// Entry point behind hadwiger-verify; args excludes the program name.
/// Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hadwiger::cli
