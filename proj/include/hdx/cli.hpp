#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hdx::cli {

// Exit codes of `run`.
inline constexpr int kExitPass = 0;  // pass, or not-applicable without --strict
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;  // bad arguments or unreadable/invalid input
inline constexpr int kExitCapacity = 3;

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Lowercase hex SHA-256 of a file's bytes; throws ParseError if unreadable.
std::string file_sha256(const std::string& path);

}  // namespace hdx::cli
