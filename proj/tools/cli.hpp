#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zakframe::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// args excludes the program name. JSON goes to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zakframe::cli
