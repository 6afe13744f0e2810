#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rindler::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kDomainError = 3,
};

inline constexpr std::string_view kCsvHeader =
    "field,parity,a_mps2,z_m,omega0_radps,zeta,theta,reduced,si_joule,regime";

// Parsed command plus raw flag values keyed by long flag name ("accel",
// "dipole-a", ...). Values from a config file fill in flags that were not
// given on the command line.
struct RunConfig {
  std::string command;
  std::map<std::string, std::string> values;

  bool has(const std::string &key) const { return values.count(key) != 0; }
};

// Flat `key = value` file, `#` starts a comment. Keys are flag names without
// the leading dashes ('_' is accepted for '-'). UsageError on unreadable
// files, malformed lines or unknown keys.
std::map<std::string, std::string> read_config_file(const std::string &path);

// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace rindler::cli
