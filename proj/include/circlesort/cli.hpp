#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace circlesort::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kBudgetRefused = 3 };

/// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circlesort::cli
