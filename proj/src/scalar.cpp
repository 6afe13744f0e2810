#include "rindler/scalar.hpp"
#include "rindler/errors.hpp"

#include <cmath>
#include <numbers>

namespace rindler::scalar {

namespace {

void require_scalar(const Scenario &s) {
  if (s.field() != FieldKind::Scalar)
    throw UsageError("scalar routine called with an electromagnetic scenario");
}

// The scalar shift carries the lower-then-upper sign pair (-+), so the
// symmetric state gets -1.
int scalar_sign(Parity p) { return -parity_sign(p); }

EnergyShift make_shift(const Scenario &s, double reduced, double zeta) {
  EnergyShift e;
  e.reduced = reduced;
  e.prefactor = energy_prefactor(s);
  e.si_joule = e.prefactor * reduced;
  e.parity_applied = true;
  e.regime = classify_regime(zeta);
  return e;
}

} // namespace

double chi_density(double omega, const ReducedGeometry &geom) {
  if (omega < 0.0)
    throw DomainError("chi_density: omega must be >= 0");
  return std::sin(omega * geom.lightcone_time);
}

double energy_prefactor(const Scenario &s) {
  const double lambda = s.coupling_lambda();
  const double c = kConstants.c;
  return lambda * lambda / (16.0 * std::numbers::pi * c * c * s.separation());
}

EnergyShift resonance_energy(const Scenario &s) {
  require_scalar(s);
  const auto geom = reduced_geometry(s);
  const double reduced =
      scalar_sign(s.parity()) * std::cos(geom.resonance_phase()) / std::sqrt(geom.big_n);
  return make_shift(s, reduced, geom.zeta);
}

EnergyShift farzone_asymptote(const Scenario &s) {
  require_scalar(s);
  const auto geom = reduced_geometry(s);
  if (geom.zeta <= 0.0)
    throw DomainError("far-zone asymptote needs a > 0 (zeta > 0)");
  // 2 Omega ln(za/c^2) with 2 Omega = theta / zeta
  const double phase = (geom.theta / geom.zeta) * std::log(2.0 * geom.zeta);
  const double reduced = scalar_sign(s.parity()) * std::cos(phase) / geom.zeta;
  auto e = make_shift(s, reduced, geom.zeta);
  e.asymptote_unreliable = geom.zeta < 1.0;
  return e;
}

EnergyShift inertial_limit(const Scenario &s) {
  require_scalar(s);
  const auto geom = reduced_geometry(s);
  const double reduced = scalar_sign(s.parity()) * std::cos(geom.theta);
  return make_shift(s, reduced, geom.zeta);
}

} // namespace rindler::scalar
