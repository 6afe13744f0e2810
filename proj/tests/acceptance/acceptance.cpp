// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "golden_cases.hpp"
#include "rindler/cli.hpp"
#include "rindler/em.hpp"
#include "rindler/errors.hpp"
#include "rindler/format.hpp"
#include "rindler/oracle.hpp"
#include "rindler/scalar.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

using namespace rindler;

namespace {

struct Verdict {
  bool passed = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

Verdict suite_within(const char *suite, double budget_s) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = oracle::run_suite(suite, quad::QuadratureSpec::from_environment());
  const double t = seconds_since(t0);
  const auto s = r.summary();
  Verdict v;
  v.passed = s.failed == 0 && s.passed > 0 && t < budget_s;
  v.detail = std::to_string(s.passed) + "/" + std::to_string(s.total - s.informational) +
             " checks pass, worst rel_error " + (s.worst ? fmt(s.worst->rel_error) : "-") +
             ", " + fmt(t) + " s (budget " + fmt(budget_s) + " s)";
  return v;
}

// 1. PV quadrature of the scalar spectral integral vs the closed form.
Verdict scalar_exactness() { return suite_within("scalar-pv", 10.0); }

// 2. PV quadrature of the EM spectral integral vs the closed form.
Verdict em_spectral_agreement() { return suite_within("em-pv", 60.0); }

// 3. Inertial limits.
Verdict inertial_limits() {
  Verdict v;
  int exact = 0, total = 0;
  for (double theta : {0.1, 0.5, 1.0, 2.0, 5.0, 31.4})
    for (auto p : {Parity::Symmetric, Parity::Antisymmetric}) {
      const auto s = Scenario::scalar(0.0, 1.0, theta * kConstants.c, p, 1.0);
      const double expected = -parity_sign(p) * std::cos(reduced_geometry(s).theta);
      ++total;
      exact += scalar::resonance_energy(s).reduced == expected;
    }
  v.passed = exact == total;

  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (double theta : {0.5, 1.0, 2.0, 5.0}) {
    auto deviation = [&](double zeta) {
      const auto s = Scenario::electromagnetic_reduced(theta, zeta, Parity::Symmetric,
                                                       {0, 0, 1}, {0, 0, 1});
      const auto g = reduced_geometry(s);
      const double z3 = std::pow(g.separation, 3);
      return em::potential_tensors(g).V * z3 - em::inertial_potential(g);
    };
    const Tensor3 d1 = deviation(1e-3), d2 = deviation(5e-4);
    const auto inertial = em::inertial_potential(reduced_geometry(Scenario::electromagnetic_reduced(
        theta, 0.0, Parity::Symmetric, {0, 0, 1}, {0, 0, 1})));
    for (auto [l, m] : kActiveComponents) {
      if (inertial(l, m) == 0.0)
        continue;
      const double ratio = d1(l, m) / d2(l, m);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
  }
  v.passed = v.passed && lo >= 3.5 && hi <= 4.5;
  v.detail = "scalar a=0 exact on " + std::to_string(exact) + "/" + std::to_string(total) +
             "; EM deviation ratio zeta 1e-3 : 5e-4 in [" + fmt(lo) + ", " + fmt(hi) + "]";
  return v;
}

// 4. Envelope slopes.
Verdict scaling_exponents() {
  struct Case {
    const char *name;
    FieldKind field;
    Axis axis;
    double omega, lo, hi, expected, tol;
  };
  const Case cases[] = {
      {"scalar-near", FieldKind::Scalar, X, 1e4, 1e-3, 1e-2, -1.0, 0.05},
      {"scalar-far", FieldKind::Scalar, X, 10.0, 100.0, 1000.0, -2.0, 0.05},
      {"em-zz-far", FieldKind::Electromagnetic, Z, 10.0, 100.0, 1000.0, -2.0, 0.1},
      {"em-yy-far", FieldKind::Electromagnetic, Y, 10.0, 100.0, 1000.0, -2.0, 0.1},
      {"em-xx-far", FieldKind::Electromagnetic, X, 10.0, 100.0, 1000.0, -4.0, 0.1},
  };
  Verdict v;
  for (const auto &c : cases) {
    const double slope = oracle::envelope_slope(c.field, c.axis, c.omega, c.lo, c.hi);
    v.passed = v.passed && std::abs(slope - c.expected) <= c.tol;
    v.detail += std::string(v.detail.empty() ? "" : ", ") + c.name + " " + fmt(slope);
  }
  return v;
}

// 5. Tensor structure on random inputs.
Verdict tensor_structure() {
  std::mt19937_64 rng(20260415);
  std::uniform_real_distribution<double> log_theta(-2.0, 2.0), log_zeta(-3.0, 3.0),
      unit(0.05, 0.95);
  int sparse = 0, antisym = 0, anisotropic = 0, static_w = 0;
  constexpr int kSamples = 1000;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < kSamples; ++i) {
    const double theta = std::pow(10.0, log_theta(rng)), zeta = std::pow(10.0, log_zeta(rng));
    const auto g = reduced_geometry(Scenario::electromagnetic_reduced(
        theta, zeta, Parity::Symmetric, {0, 0, 1}, {0, 0, 1}));
    const auto p = em::potential_tensors(g);
    const auto sp = em::spectral_tensors_reduced(theta, zeta);
    const double s = asinh_ratio(zeta);
    const auto noise = em::wightman_reduced(unit(rng) * s, zeta);
    const auto noise_t = em::wightman_reduced(s * (1.0 + 4.0 * unit(rng)), zeta);
    bool ok = has_two_atom_sparsity(p.V) && has_two_atom_sparsity(p.W) &&
              has_two_atom_sparsity(p.reduced_total) && has_two_atom_sparsity(sp.f_diag) &&
              has_two_atom_sparsity(sp.g_diag) && has_two_atom_sparsity(sp.f_cross) &&
              has_two_atom_sparsity(sp.g_cross) && has_two_atom_sparsity(em::farzone_tensor(g)) &&
              has_two_atom_sparsity(noise) && has_two_atom_sparsity(noise_t);
    sparse += ok;

    const double wscale = std::max(std::abs(p.W(X, Z)), std::abs(p.W(Z, X)));
    antisym += std::abs(p.W(X, Z) + p.W(Z, X)) <= 4 * eps * wscale;

    const auto &t = p.reduced_total;
    anisotropic += std::abs(t(X, X) - t(Y, Y)) > 1e-12 * (std::abs(t(X, X)) + std::abs(t(Y, Y)));

    const auto g0 = reduced_geometry(Scenario::electromagnetic_reduced(
        theta, 0.0, Parity::Symmetric, {0, 0, 1}, {0, 0, 1}));
    static_w += em::potential_tensors(g0).W == Tensor3{};
  }
  Verdict v;
  v.passed = sparse == kSamples && antisym == kSamples && static_w == kSamples &&
             anisotropic >= 0.99 * kSamples;
  v.detail = "sparsity " + std::to_string(sparse) + "/1000, W_xz + W_zx = 0 " +
             std::to_string(antisym) + "/1000, W = 0 at a = 0 " + std::to_string(static_w) +
             "/1000, xx != yy " + std::to_string(anisotropic) + "/1000";
  return v;
}

// 6. Parity flip and the (a, z, omega0) -> (k a, z/k, k omega0) invariance.
Verdict symmetries() {
  int parity_ok = 0, parity_total = 0;
  double worst = 0.0;
  auto energy = [](const Scenario &s) {
    return s.field() == FieldKind::Scalar ? scalar::resonance_energy(s) : em::resonance_energy(s);
  };
  const std::pair<Vec3, Vec3> dipoles[] = {
      {{0, 0, 1}, {0, 0, 1}}, {{1, 0, 0}, {1, 0, 0}}, {{0, 1, 0}, {0, 1, 0}},
      {{1, 0, 0}, {0, 0, 1}}, {{0.3, -0.2, 0.9}, {0.5, 0.7, -0.1}}};
  for (double a : {0.0, 1e17, 1e20, 3e22})
    for (double z : {1e-6, 1e-4, 1e-2})
      for (double w0 : {1e9, 1e12, 1e15}) {
        std::vector<Scenario> scenarios{Scenario::scalar(a, z, w0, Parity::Symmetric, 0.7)};
        for (const auto &[da, db] : dipoles)
          scenarios.push_back(Scenario::electromagnetic(a, z, w0, Parity::Symmetric, da, db));
        for (const auto &s : scenarios) {
          const auto sym = energy(s), anti = energy(s.with_parity(Parity::Antisymmetric));
          ++parity_total;
          parity_ok += anti.reduced == -sym.reduced && anti.si_joule == -sym.si_joule;
          for (double k : {1e-3, 1e3}) {
            const Scenario scaled =
                s.field() == FieldKind::Scalar
                    ? Scenario::scalar(k * a, z / k, k * w0, Parity::Symmetric, 0.7)
                    : Scenario::electromagnetic(k * a, z / k, k * w0, Parity::Symmetric,
                                                s.dipole_a(), s.dipole_b());
            const double r = energy(scaled).reduced;
            worst = std::max(worst, std::abs(r - sym.reduced) /
                                        std::max(std::abs(sym.reduced), 1e-300));
          }
        }
      }
  Verdict v;
  v.passed = parity_ok == parity_total && worst < 1e-12;
  v.detail = "parity flip exact on " + std::to_string(parity_ok) + "/" +
             std::to_string(parity_total) + ", worst scaling rel deviation " + fmt(worst);
  return v;
}

// 7. Commutator consistency with documented component flags.
Verdict commutator_consistency() {
  const auto r = oracle::run_suite("em-commutator", quad::QuadratureSpec::from_environment());
  std::vector<std::string> flagged;
  int pairs = 0, agreeing = 0;
  for (const auto &c : r.checks()) {
    const auto pos = c.id.rfind('/');
    const std::string comp = c.id.substr(pos + 1);
    if (c.id.find("/u/S=") == std::string::npos || comp == "skipped")
      continue;
    if (c.informational) {
      if (std::find(flagged.begin(), flagged.end(), comp) == flagged.end())
        flagged.push_back(comp);
      continue;
    }
    ++pairs;
    agreeing += c.passed;
  }
  Verdict v;
  v.passed = r.all_passed() && pairs > 0 && agreeing >= 0.9 * pairs;
  v.detail = std::to_string(agreeing) + "/" + std::to_string(pairs) +
             " (u, component) pairs agree on non-flagged components; flagged systematic:";
  for (const auto &f : flagged)
    v.detail += " " + f;
  if (flagged.empty())
    v.detail += " none";
  return v;
}

// 8. Unruh temperature at 1e20 m/s^2.
Verdict unruh_scale() {
  const double t = unruh_temperature(1e20);
  return {t >= 0.1 && t <= 1.0, "T_U(1e20 m/s^2) = " + fmt(t) + " K"};
}

// 9. CLI golden files, exit codes, CSV schema.
Verdict cli_contract() {
  Verdict v;
  int golden_ok = 0;
  for (const auto &c : golden_cases()) {
    const std::string diff = compare_golden(c, RINDLER_GOLDEN_DIR);
    if (diff.empty())
      ++golden_ok;
    else
      v.detail += diff + "; ";
  }
  struct ExitCase {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<ExitCase> exits{
      {{"compute", "--field", "scalar", "--accel", "0", "--omega0", "1"}, cli::kUsageError},
      {{"compute", "--field", "scalar", "--accel", "-1", "--sep", "1", "--omega0", "1"},
       cli::kDomainError},
      {{"sweep", "--field", "scalar", "--accel", "1", "--omega0", "1", "--param", "sep", "--from",
        "1", "--to", "1", "--points", "2", "--spacing", "log"},
       cli::kUsageError},
      {{"verify", "--suite", "nope"}, cli::kUsageError},
      {{"verify", "--suite", "all", "--tol", "1e-30"}, cli::kVerificationFailed},
      {{"regimes", "--accel", "1e20"}, cli::kSuccess},
  };
  int exit_ok = 0;
  for (const auto &e : exits) {
    const int code = run_cli(e.args).exit_code;
    if (code == e.code)
      ++exit_ok;
    else
      v.detail += e.args[0] + " exit " + std::to_string(code) + " expected " +
                  std::to_string(e.code) + "; ";
  }
  const auto sweep = run_cli({"sweep", "--field", "scalar", "--accel", "1", "--omega0", "1",
                              "--param", "sep", "--from", "1", "--to", "2", "--points", "2"});
  const bool schema = sweep.exit_code == 0 &&
                      sweep.out.substr(0, sweep.out.find('\n')) == cli::kCsvHeader &&
                      std::count(sweep.out.begin(), sweep.out.end(), '\n') == 3;
  v.passed = golden_ok == static_cast<int>(golden_cases().size()) &&
             exit_ok == static_cast<int>(exits.size()) && schema;
  v.detail += "golden " + std::to_string(golden_ok) + "/" + std::to_string(golden_cases().size()) +
              ", exit codes " + std::to_string(exit_ok) + "/" + std::to_string(exits.size()) +
              ", csv schema " + (schema ? "stable" : "changed");
  return v;
}

} // namespace

int main() {
  const std::pair<const char *, std::function<Verdict()>> criteria[] = {
      {"scalar-exactness", scalar_exactness},
      {"em-spectral-agreement", em_spectral_agreement},
      {"inertial-limits", inertial_limits},
      {"scaling-exponents", scaling_exponents},
      {"tensor-structure", tensor_structure},
      {"symmetries", symmetries},
      {"commutator-consistency", commutator_consistency},
      {"unruh-scale", unruh_scale},
      {"cli-contract", cli_contract},
  };
  int failures = 0, index = 0;
  for (const auto &[name, run] : criteria) {
    ++index;
    Verdict v;
    try {
      v = run();
    } catch (const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.passed;
    std::cout << (v.passed ? "PASS" : "FAIL") << " criterion " << index << " " << name << ": "
              << v.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
