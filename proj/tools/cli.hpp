#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fqtype::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

/// Runs one invocation; args excludes the program name. Reports go to `out`
/// (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqtype::cli
