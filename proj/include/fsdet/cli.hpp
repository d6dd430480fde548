#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsdet {

inline constexpr const char* kVersion = "1.0.0";

/// Runs one CLI invocation. Reports go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 a verification suite found a violation,
/// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsdet
