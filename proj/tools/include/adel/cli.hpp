#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adel::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs one `adel` invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adel::cli
