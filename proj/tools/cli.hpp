#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace combdeform::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, input_error = 2, size_cap = 3 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace combdeform::cli
