#pragma once

// Subcommands of the command-line tool as pure functions from options to
// (exit code, stdout, stderr), so they can be run and compared in-process.

#include <optional>
#include <string>
#include <vector>

namespace wcx {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandOptions {
  int p = 0;
  int q = 0;
  std::optional<std::string> subset;
  std::optional<std::string> lambda;
  std::optional<std::string> profile;
  bool ic = false;
  std::optional<int> stratum;
  std::vector<std::string> gamma0;  // "[s=K:]x1,...,xk;c"
  std::optional<std::string> config;
  std::optional<std::string> format;
  bool oracle = false;
  bool strict = false;
  std::string suite = "all";
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// "info", "kostant", "restrict", "trace" or "verify". Input errors become
/// exit code 2 with a message on err.
CommandResult run_command(const std::string& name, const CommandOptions& opt);

}  // namespace wcx
