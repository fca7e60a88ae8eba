#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kitaev::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kIoError = 3 };

// Relative --out / --out-dir paths resolve against this directory when set.
inline constexpr const char* kOutDirEnv = "KITAEV_OUT_DIR";

/// Runs one CLI invocation. `args` excludes the program name. Human-readable
/// output goes to `out`, warnings and errors to `err`; machine-readable
/// results are only ever written to files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kitaev::cli
