#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eltrans::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kStrictAuditFailure = 3,
  kPipelineDisagreement = 4,
};

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kMaxJEnv = "ELTRANS_MAX_J";

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eltrans::cli
