#pragma once

#include "rindler/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// CLI invocations whose stdout is frozen under tests/golden/<name>.out.
// `ids_only` compares just the first two tokens of each line (verdict and id),
// so the golden file does not pin quadrature noise.
struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  int exit_code = 0;
  bool ids_only = false;
};

inline const std::vector<GoldenCase> &golden_cases() {
  static const std::vector<GoldenCase> cases{
      {"compute_scalar_sym_text",
       {"compute", "--field", "scalar", "--parity", "sym", "--accel", "0", "--sep", "1",
        "--omega0", "941825783.6544266"}},
      {"compute_em_zz_static_csv",
       {"compute", "--field", "em", "--accel", "0", "--sep", "1", "--omega0", "0", "--dipole-a",
        "0,0,1", "--dipole-b", "0,0,1", "--format", "csv"}},
      {"compute_em_xz_anti_csv",
       {"compute", "--field", "em", "--parity", "anti", "--accel", "1e20", "--sep", "1e-4",
        "--omega0", "1e12", "--dipole-a", "1,0,0", "--dipole-b", "0,0,1", "--format", "csv"}},
      {"sweep_sep_log_csv",
       {"sweep", "--field", "scalar", "--accel", "1e20", "--omega0", "1e13", "--param", "sep",
        "--from", "1e-6", "--to", "1e-1", "--points", "6", "--spacing", "log", "--format",
        "csv"}},
      {"sweep_omega0_lin_text",
       {"sweep", "--field", "em", "--accel", "1e20", "--sep", "1e-3", "--dipole-a", "0,1,0",
        "--dipole-b", "0,1,0", "--param", "omega0", "--from", "1e11", "--to", "5e11",
        "--points", "5", "--format", "text"}},
      {"regimes_inertial", {"regimes", "--accel", "0"}},
      {"regimes_full",
       {"regimes", "--accel", "1e20", "--omega0", "1e15", "--sep", "1e-3"}},
      {"verify_scalar_pv", {"verify", "--suite", "scalar-pv"}, 0, true},
  };
  return cases;
}

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = rindler::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string first_two_tokens(const std::string &text) {
  std::istringstream in(text);
  std::string line, result;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string a, b;
    ls >> a >> b;
    result += a + ' ' + b + '\n';
  }
  return result;
}

// Empty string on a match, otherwise a one-line description of the mismatch.
inline std::string compare_golden(const GoldenCase &c, const std::string &dir) {
  const CliResult r = run_cli(c.args);
  if (r.exit_code != c.exit_code)
    return c.name + ": exit " + std::to_string(r.exit_code) + ", expected " +
           std::to_string(c.exit_code);
  const std::string expected = read_file(dir + "/" + c.name + ".out");
  if (expected.empty())
    return c.name + ": golden file missing or empty";
  const bool same = c.ids_only ? first_two_tokens(r.out) == first_two_tokens(expected)
                               : r.out == expected;
  return same ? "" : c.name + ": output differs from golden file";
}
