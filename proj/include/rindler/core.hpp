#pragma once

#include "rindler/tensor.hpp"

#include <optional>
#include <string_view>

namespace rindler {

//******************************************************************************
// Constants (CODATA 2018, SI). The field formulas themselves are written in
// Gaussian form; `coulomb` converts dipole energies to joules.
struct PhysicalConstants {
  double c;       // m/s
  double hbar;    // J s
  double kB;      // J/K
  double coulomb; // 1/(4 pi eps0), N m^2 / C^2
};

inline constexpr PhysicalConstants kConstants{
    299792458.0, 1.054571817e-34, 1.380649e-23, 8.9875517923e9};

//******************************************************************************
enum class Parity { Symmetric, Antisymmetric };
enum class FieldKind { Scalar, Electromagnetic };

// Regime bands around the crossover length z_a = c^2/a.
enum class Regime { Inertial, Intermediate, FarZone };

inline constexpr double kInertialZetaBound = 0.1;
inline constexpr double kFarZoneZetaBound = 10.0;

Regime classify_regime(double zeta);

std::string_view to_string(Parity p);
std::string_view to_string(FieldKind f);
std::string_view to_string(Regime r);

//******************************************************************************
// Physical inputs of one two-atom configuration. Constructed only through the
// validating factories, so a Scenario in hand always satisfies its invariants.
class Scenario {
public:
  static Scenario scalar(double acceleration, double separation, double omega0,
                         Parity parity, double coupling_lambda);
  static Scenario electromagnetic(double acceleration, double separation,
                                  double omega0, Parity parity,
                                  const Vec3 &dipole_a, const Vec3 &dipole_b);

  // Convenience: build from the dimensionless pair (theta, zeta) at the given
  // separation. theta = omega0 z / c, zeta = z a / 2c^2.
  static Scenario scalar_reduced(double theta, double zeta, Parity parity,
                                 double separation = 1.0, double lambda = 1.0);
  static Scenario electromagnetic_reduced(double theta, double zeta,
                                          Parity parity, const Vec3 &dipole_a,
                                          const Vec3 &dipole_b,
                                          double separation = 1.0);

  double acceleration() const { return acceleration_; }
  double separation() const { return separation_; }
  double omega0() const { return omega0_; }
  Parity parity() const { return parity_; }
  FieldKind field() const { return field_; }

  // Throws UsageError when the scenario is of the other field kind.
  double coupling_lambda() const;
  const Vec3 &dipole_a() const;
  const Vec3 &dipole_b() const;

  Scenario with_parity(Parity p) const;

private:
  Scenario() = default;

  double acceleration_ = 0.0;
  double separation_ = 1.0;
  double omega0_ = 0.0;
  Parity parity_ = Parity::Symmetric;
  FieldKind field_ = FieldKind::Scalar;
  std::optional<double> lambda_;
  std::optional<Vec3> dipole_a_;
  std::optional<Vec3> dipole_b_;
};

//******************************************************************************
// Dimensionless groups of (a, z, omega0). All physics kernels consume these.
struct ReducedGeometry {
  double acceleration;             // a (m/s^2)
  double separation;               // z (m)
  double omega0;                   // omega0 (rad/s)
  double zeta;                     // z a / 2c^2
  double big_n;                    // 1 + zeta^2
  double asinh_zeta;               // asinh(zeta) = a S / 2c
  double lightcone_time;           // S = (2c/a) asinh(zeta); z/c at a = 0
  double theta;                    // omega0 z / c
  std::optional<double> omega_ratio; // Omega = omega0 c / a; empty at a = 0
  double crossover_length;         // z_a = c^2/a; +inf at a = 0

  // z/c
  double light_time() const;
  // omega0 S = theta * asinh(zeta)/zeta, the phase of every resonance formula
  double resonance_phase() const;
};

ReducedGeometry reduced_geometry(const Scenario &scenario);
ReducedGeometry reduced_geometry(double acceleration, double separation,
                                 double omega0);

// asinh(zeta)/zeta, continuous through zeta = 0 (series below 1e-4).
double asinh_ratio(double zeta);

double unruh_temperature(double acceleration);

// +1 selects the upper sign of every +-/-+ pair (symmetric state),
// -1 the lower one.
int parity_sign(Parity parity);

// cos(omega0 u): the e^{+i w u} + e^{-i w u} combination shared by both
// fields' atomic correlation functions.
double correlation_base(double u, double omega0);

// Full atomic correlation form factor: +-(1/4) cos for the scalar coupling,
// +-cos (times the dipole dyad, applied by the caller) for the EM one.
double atomic_correlation_factor(double u, double omega0, Parity parity,
                                 FieldKind field);

//******************************************************************************
struct EnergyShift {
  double reduced = 0.0;   // dimensionless, parity applied
  double si_joule = 0.0;  // prefactor * reduced
  double prefactor = 0.0; // the explicit unit conversion used
  bool parity_applied = true;
  Regime regime = Regime::Inertial;
  bool asymptote_unreliable = false; // set by far-zone routines when zeta < 1
};

} // namespace rindler
