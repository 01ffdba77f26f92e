#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mthv::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalidInput = 2, kInconclusive = 3 };

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

/// Runs one command. `args` excludes the program name. The report goes to
/// `out`; usage, warnings and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace mthv::cli
