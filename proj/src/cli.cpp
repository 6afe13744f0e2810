#include "rindler/cli.hpp"
#include "rindler/core.hpp"
#include "rindler/em.hpp"
#include "rindler/errors.hpp"
#include "rindler/format.hpp"
#include "rindler/oracle.hpp"
#include "rindler/scalar.hpp"

#include "CLI11.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace rindler::cli {

namespace {

const std::vector<std::string> kScenarioKeys{"field",  "parity", "accel",    "sep",
                                             "omega0", "lambda", "dipole-a", "dipole-b"};
const std::vector<std::string> kOutputKeys{"out", "format"};
const std::vector<std::string> kSweepKeys{"param", "from", "to", "points", "spacing"};
const std::vector<std::string> kVerifyKeys{"suite", "tol"};
const std::vector<std::string> kRegimeKeys{"accel", "omega0", "sep"};

bool is_known_key(const std::string &key) {
  for (const auto *keys : {&kScenarioKeys, &kOutputKeys, &kSweepKeys, &kVerifyKeys})
    for (const auto &k : *keys)
      if (k == key)
        return true;
  return false;
}

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

//******************************************************************************
// Typed access to raw values. Every conversion failure is a usage error.

const std::string &require(const RunConfig &cfg, const std::string &key) {
  const auto it = cfg.values.find(key);
  if (it == cfg.values.end())
    throw UsageError("missing required flag --" + key);
  return it->second;
}

double to_number(const std::string &key, const std::string &raw) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw UsageError("--" + key + ": '" + raw + "' is not a number");
  return v;
}

double number(const RunConfig &cfg, const std::string &key) {
  return to_number(key, require(cfg, key));
}

double number_or(const RunConfig &cfg, const std::string &key, double fallback) {
  return cfg.has(key) ? number(cfg, key) : fallback;
}

Vec3 vector3(const RunConfig &cfg, const std::string &key) {
  const std::string &raw = require(cfg, key);
  Vec3 v{};
  std::stringstream ss(raw);
  std::string part;
  std::size_t n = 0;
  while (std::getline(ss, part, ',')) {
    if (n == 3)
      throw UsageError("--" + key + ": expected three components x,y,z");
    v[n++] = to_number(key, part);
  }
  if (n != 3)
    throw UsageError("--" + key + ": expected three components x,y,z");
  return v;
}

std::string choice(const RunConfig &cfg, const std::string &key,
                   const std::vector<std::string> &allowed,
                   std::optional<std::string> fallback = std::nullopt) {
  if (!cfg.has(key)) {
    if (fallback)
      return *fallback;
    throw UsageError("missing required flag --" + key);
  }
  const std::string v = trim(cfg.values.at(key));
  for (const auto &a : allowed)
    if (v == a)
      return v;
  std::string list;
  for (const auto &a : allowed)
    list += (list.empty() ? "" : "|") + a;
  throw UsageError("--" + key + ": '" + v + "' is not one of " + list);
}

bool csv_format(const RunConfig &cfg) {
  return choice(cfg, "format", {"csv", "text"}, "text") == "csv";
}

//******************************************************************************
struct Point {
  Scenario scenario;
  ReducedGeometry geom;
  EnergyShift shift;
};

Point evaluate(const RunConfig &cfg, const std::string &swept = "", double swept_value = 0.0) {
  const bool scalar = choice(cfg, "field", {"scalar", "em"}) == "scalar";
  const Parity parity = choice(cfg, "parity", {"sym", "anti"}, "sym") == "sym"
                            ? Parity::Symmetric
                            : Parity::Antisymmetric;
  auto value = [&](const std::string &key) {
    return key == swept ? swept_value : number(cfg, key);
  };
  const double a = value("accel"), z = value("sep"), w0 = value("omega0");
  const Scenario s = scalar ? Scenario::scalar(a, z, w0, parity, number_or(cfg, "lambda", 1.0))
                            : Scenario::electromagnetic(a, z, w0, parity, vector3(cfg, "dipole-a"),
                                                        vector3(cfg, "dipole-b"));
  const EnergyShift e = scalar ? scalar::resonance_energy(s) : em::resonance_energy(s);
  return {s, reduced_geometry(s), e};
}

void write_row(std::ostream &out, const Point &p, char sep) {
  out << to_string(p.scenario.field()) << sep << to_string(p.scenario.parity()) << sep
      << format_sci17(p.scenario.acceleration()) << sep << format_sci17(p.scenario.separation())
      << sep << format_sci17(p.scenario.omega0()) << sep << format_sci17(p.geom.zeta) << sep
      << format_sci17(p.geom.theta) << sep << format_sci17(p.shift.reduced) << sep
      << format_sci17(p.shift.si_joule) << sep << to_string(p.shift.regime) << '\n';
}

void write_header(std::ostream &out, char sep) {
  std::string h(kCsvHeader);
  if (sep != ',')
    for (auto &ch : h)
      if (ch == ',')
        ch = sep;
  out << h << '\n';
}

// Output goes to --out when given, otherwise to the command's stream.
class Sink {
public:
  Sink(const RunConfig &cfg, std::ostream &fallback) : stream_(&fallback) {
    if (cfg.has("out")) {
      file_ = std::make_unique<std::ofstream>(cfg.values.at("out"));
      if (!*file_)
        throw UsageError("--out: cannot open '" + cfg.values.at("out") + "' for writing");
      stream_ = file_.get();
    }
  }
  std::ostream &stream() { return *stream_; }

private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream *stream_;
};

//******************************************************************************
int cmd_compute(const RunConfig &cfg, std::ostream &out) {
  const Point p = evaluate(cfg);
  Sink sink(cfg, out);
  std::ostream &o = sink.stream();
  if (csv_format(cfg)) {
    write_header(o, ',');
    write_row(o, p, ',');
    return kSuccess;
  }
  o << "field: " << to_string(p.scenario.field()) << '\n'
    << "parity: " << to_string(p.scenario.parity()) << '\n'
    << "a_mps2: " << format_short(p.scenario.acceleration()) << '\n'
    << "z_m: " << format_short(p.scenario.separation()) << '\n'
    << "omega0_radps: " << format_short(p.scenario.omega0()) << '\n'
    << "zeta: " << format_short(p.geom.zeta) << '\n'
    << "theta: " << format_short(p.geom.theta) << '\n'
    << "Omega: " << (p.geom.omega_ratio ? format_short(*p.geom.omega_ratio) : "undefined")
    << '\n'
    << "z_a_m: " << format_short(p.geom.crossover_length) << '\n'
    << "T_U_K: " << format_short(unruh_temperature(p.scenario.acceleration())) << '\n'
    << "reduced: " << format_short(p.shift.reduced) << '\n'
    << "prefactor: " << format_short(p.shift.prefactor) << '\n'
    << "si_joule: " << format_short(p.shift.si_joule) << '\n'
    << "regime: " << to_string(p.shift.regime) << '\n';
  return kSuccess;
}

int cmd_sweep(const RunConfig &cfg, std::ostream &out) {
  const std::string param = choice(cfg, "param", {"sep", "accel", "omega0"});
  const bool log = choice(cfg, "spacing", {"lin", "log"}, "lin") == "log";
  const double from = number(cfg, "from"), to = number(cfg, "to");
  const double points_raw = number(cfg, "points");
  if (!(from > 0.0) || !(to > 0.0) || !std::isfinite(from) || !std::isfinite(to))
    throw UsageError("--from and --to must be finite and > 0");
  if (!(from < to))
    throw UsageError("--from must be smaller than --to");
  if (points_raw != std::floor(points_raw) || points_raw < 2 || points_raw > 1e6)
    throw UsageError("--points must be an integer >= 2");
  const int n = static_cast<int>(points_raw);

  // Evaluate everything first so a domain error leaves no partial table.
  std::vector<Point> rows;
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    double v = log ? from * std::pow(to / from, f) : from + (to - from) * f;
    if (i == n - 1)
      v = to;
    rows.push_back(evaluate(cfg, param, v));
  }
  Sink sink(cfg, out);
  const char sep = csv_format(cfg) || !cfg.has("format") ? ',' : ' ';
  write_header(sink.stream(), sep);
  for (const auto &r : rows)
    write_row(sink.stream(), r, sep);
  return kSuccess;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
  const std::string suite = trim(cfg.has("suite") ? cfg.values.at("suite") : "all");
  auto spec = quad::QuadratureSpec::from_environment();
  std::optional<double> tol;
  if (cfg.has("tol")) {
    tol = number(cfg, "tol");
    if (!(*tol > 0.0) || !std::isfinite(*tol))
      throw UsageError("--tol must be finite and > 0");
  }
  const bool csv = csv_format(cfg);
  oracle::VerificationReport report = oracle::run_suite(suite, spec);
  if (tol)
    report.override_tolerance(*tol);

  if (cfg.has("out")) {
    Sink sink(cfg, out);
    report.write_csv(sink.stream());
  }
  if (csv && !cfg.has("out"))
    report.write_csv(out);
  else
    report.write_text(out);
  return report.all_passed() ? kSuccess : kVerificationFailed;
}

int cmd_regimes(const RunConfig &cfg, std::ostream &out) {
  const double a = number(cfg, "accel");
  const bool has_w0 = cfg.has("omega0"), has_sep = cfg.has("sep");
  const double w0 = number_or(cfg, "omega0", 0.0);
  // the unit separation only stands in when --sep is absent; its rows are not printed
  const auto g = reduced_geometry(a, number_or(cfg, "sep", 1.0), w0);

  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("a_mps2", format_short(a));
  rows.emplace_back("z_a_m", format_short(g.crossover_length));
  rows.emplace_back("T_U_K", format_short(unruh_temperature(a)));
  if (has_w0) {
    rows.emplace_back("omega0_radps", format_short(w0));
    rows.emplace_back("wavelength_scale_m",
                      format_short(w0 > 0.0 ? kConstants.c / w0
                                            : std::numeric_limits<double>::infinity()));
    if (g.omega_ratio)
      rows.emplace_back("Omega", format_short(*g.omega_ratio));
  }
  if (has_sep) {
    rows.emplace_back("z_m", format_short(g.separation));
    rows.emplace_back("zeta", format_short(g.zeta));
    if (has_w0)
      rows.emplace_back("theta", format_short(g.theta));
    rows.emplace_back("regime", std::string(to_string(classify_regime(g.zeta))));
  }

  Sink sink(cfg, out);
  std::ostream &o = sink.stream();
  if (csv_format(cfg)) {
    o << "quantity,value\n";
    for (const auto &[k, v] : rows)
      o << k << ',' << v << '\n';
  } else {
    for (const auto &[k, v] : rows)
      o << k << ": " << v << '\n';
  }
  return kSuccess;
}

} // namespace

//******************************************************************************
std::map<std::string, std::string> read_config_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("--config: cannot read '" + path + "'");
  std::map<std::string, std::string> values;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(number) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    for (auto &ch : key)
      if (ch == '_')
        ch = '-';
    const std::string value = trim(line.substr(eq + 1));
    if (!is_known_key(key))
      throw UsageError(path + ":" + std::to_string(number) + ": unknown key '" + key + "'");
    values[key] = value;
  }
  return values;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Resonance interaction of two uniformly accelerated atoms"};
  app.name("rindler_resonance");
  app.require_subcommand(1);

  struct Command {
    CLI::App *app;
    std::vector<std::string> keys;
    std::map<std::string, std::string> raw;
    std::map<std::string, CLI::Option *> options;
    std::string config_path;
  };
  std::map<std::string, Command> commands;

  auto define = [&](const std::string &name, const std::string &help,
                    std::vector<std::vector<std::string>> key_groups) {
    Command &c = commands[name];
    c.app = app.add_subcommand(name, help);
    for (const auto &group : key_groups)
      c.keys.insert(c.keys.end(), group.begin(), group.end());
    for (const auto &key : c.keys)
      c.options[key] = c.app->add_option("--" + key, c.raw[key]);
    c.app->add_option("--config", c.config_path, "flat key = value file; flags win");
  };
  define("compute", "evaluate one configuration", {kScenarioKeys, kOutputKeys});
  define("sweep", "sweep one parameter and emit a table", {kScenarioKeys, kOutputKeys, kSweepKeys});
  define("verify", "run oracle suites", {kVerifyKeys, kOutputKeys});
  define("regimes", "crossover length and Unruh temperature", {kRegimeKeys, kOutputKeys});

  std::vector<const char *> argv{"rindler_resonance"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    for (auto &[name, c] : commands) {
      if (!c.app->parsed())
        continue;
      RunConfig cfg;
      cfg.command = name;
      for (const auto &key : c.keys)
        if (c.options[key]->count() > 0)
          cfg.values[key] = c.raw[key];
      if (!c.config_path.empty()) {
        for (const auto &[key, value] : read_config_file(c.config_path)) {
          const bool applies = std::find(c.keys.begin(), c.keys.end(), key) != c.keys.end();
          if (applies && !cfg.has(key))
            cfg.values[key] = value;
        }
      }
      if (name == "compute")
        return cmd_compute(cfg, out);
      if (name == "sweep")
        return cmd_sweep(cfg, out);
      if (name == "verify")
        return cmd_verify(cfg, out);
      return cmd_regimes(cfg, out);
    }
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError &e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const QuadratureError &e) {
    err << "verification could not complete: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const CalibrationError &e) {
    err << "verification could not complete: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

} // namespace rindler::cli
