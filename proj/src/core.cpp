#include "rindler/core.hpp"
#include "rindler/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace rindler {

namespace {

void require_finite(double v, const char *what) {
  if (!std::isfinite(v))
    throw DomainError(std::string(what) + " must be finite");
}

void validate_kinematics(double acceleration, double separation, double omega0) {
  require_finite(acceleration, "acceleration");
  require_finite(separation, "separation");
  require_finite(omega0, "omega0");
  if (separation <= 0.0)
    throw DomainError("separation must be > 0 (got " + std::to_string(separation) + ")");
  if (acceleration < 0.0)
    throw DomainError("acceleration must be >= 0 (got " + std::to_string(acceleration) + ")");
  if (omega0 < 0.0)
    throw DomainError("omega0 must be >= 0 (got " + std::to_string(omega0) + ")");
}

bool is_zero(const Vec3 &v) { return v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0; }

} // namespace

Regime classify_regime(double zeta) {
  if (zeta < kInertialZetaBound)
    return Regime::Inertial;
  if (zeta > kFarZoneZetaBound)
    return Regime::FarZone;
  return Regime::Intermediate;
}

std::string_view to_string(Parity p) {
  return p == Parity::Symmetric ? "sym" : "anti";
}

std::string_view to_string(FieldKind f) {
  return f == FieldKind::Scalar ? "scalar" : "em";
}

std::string_view to_string(Regime r) {
  switch (r) {
  case Regime::Inertial:
    return "Inertial";
  case Regime::Intermediate:
    return "Intermediate";
  case Regime::FarZone:
    return "FarZone";
  }
  return "?";
}

//******************************************************************************
Scenario Scenario::scalar(double acceleration, double separation, double omega0,
                          Parity parity, double coupling_lambda) {
  validate_kinematics(acceleration, separation, omega0);
  require_finite(coupling_lambda, "coupling lambda");
  if (coupling_lambda <= 0.0)
    throw DomainError("coupling lambda must be > 0");
  Scenario s;
  s.acceleration_ = acceleration;
  s.separation_ = separation;
  s.omega0_ = omega0;
  s.parity_ = parity;
  s.field_ = FieldKind::Scalar;
  s.lambda_ = coupling_lambda;
  return s;
}

Scenario Scenario::electromagnetic(double acceleration, double separation,
                                   double omega0, Parity parity,
                                   const Vec3 &dipole_a, const Vec3 &dipole_b) {
  validate_kinematics(acceleration, separation, omega0);
  for (double v : dipole_a)
    require_finite(v, "dipole_a component");
  for (double v : dipole_b)
    require_finite(v, "dipole_b component");
  if (is_zero(dipole_a) || is_zero(dipole_b))
    throw DomainError("dipole vectors must be nonzero");
  Scenario s;
  s.acceleration_ = acceleration;
  s.separation_ = separation;
  s.omega0_ = omega0;
  s.parity_ = parity;
  s.field_ = FieldKind::Electromagnetic;
  s.dipole_a_ = dipole_a;
  s.dipole_b_ = dipole_b;
  return s;
}

Scenario Scenario::scalar_reduced(double theta, double zeta, Parity parity,
                                  double separation, double lambda) {
  const double c = kConstants.c;
  return scalar(2.0 * c * c * zeta / separation, separation, theta * c / separation,
                parity, lambda);
}

Scenario Scenario::electromagnetic_reduced(double theta, double zeta,
                                           Parity parity, const Vec3 &dipole_a,
                                           const Vec3 &dipole_b,
                                           double separation) {
  const double c = kConstants.c;
  return electromagnetic(2.0 * c * c * zeta / separation, separation,
                         theta * c / separation, parity, dipole_a, dipole_b);
}

double Scenario::coupling_lambda() const {
  if (!lambda_)
    throw UsageError("scenario has no scalar coupling (field is em)");
  return *lambda_;
}

const Vec3 &Scenario::dipole_a() const {
  if (!dipole_a_)
    throw UsageError("scenario has no dipole moments (field is scalar)");
  return *dipole_a_;
}

const Vec3 &Scenario::dipole_b() const {
  if (!dipole_b_)
    throw UsageError("scenario has no dipole moments (field is scalar)");
  return *dipole_b_;
}

Scenario Scenario::with_parity(Parity p) const {
  Scenario s = *this;
  s.parity_ = p;
  return s;
}

//******************************************************************************
double asinh_ratio(double zeta) {
  if (std::abs(zeta) < 1e-4) {
    const double z2 = zeta * zeta;
    return 1.0 - z2 / 6.0 + 3.0 * z2 * z2 / 40.0;
  }
  return std::asinh(zeta) / zeta;
}

double ReducedGeometry::light_time() const { return separation / kConstants.c; }

double ReducedGeometry::resonance_phase() const {
  return theta * asinh_ratio(zeta);
}

ReducedGeometry reduced_geometry(double acceleration, double separation,
                                 double omega0) {
  validate_kinematics(acceleration, separation, omega0);
  const double c = kConstants.c;
  ReducedGeometry g{};
  g.acceleration = acceleration;
  g.separation = separation;
  g.omega0 = omega0;
  g.zeta = separation * acceleration / (2.0 * c * c);
  g.big_n = 1.0 + g.zeta * g.zeta;
  g.asinh_zeta = std::asinh(g.zeta);
  g.lightcone_time = (separation / c) * asinh_ratio(g.zeta);
  g.theta = omega0 * separation / c;
  if (acceleration > 0.0) {
    g.omega_ratio = omega0 * c / acceleration;
    g.crossover_length = c * c / acceleration;
  } else {
    g.crossover_length = std::numeric_limits<double>::infinity();
  }
  return g;
}

ReducedGeometry reduced_geometry(const Scenario &scenario) {
  return reduced_geometry(scenario.acceleration(), scenario.separation(),
                          scenario.omega0());
}

double unruh_temperature(double acceleration) {
  if (!(acceleration >= 0.0) || !std::isfinite(acceleration))
    throw DomainError("acceleration must be finite and >= 0");
  const auto &k = kConstants;
  return k.hbar * acceleration / (2.0 * std::numbers::pi * k.kB * k.c);
}

int parity_sign(Parity parity) { return parity == Parity::Symmetric ? +1 : -1; }

double correlation_base(double u, double omega0) { return std::cos(omega0 * u); }

double atomic_correlation_factor(double u, double omega0, Parity parity,
                                 FieldKind field) {
  const double norm = field == FieldKind::Scalar ? 0.25 : 1.0;
  return parity_sign(parity) * norm * correlation_base(u, omega0);
}

} // namespace rindler
