#pragma once

#include "rindler/core.hpp"

// Resonance interaction of two accelerated atoms coupled to a massless scalar
// field. Reduced energies are in units of lambda^2 / (16 pi c^2 z).
namespace rindler::scalar {

// g(omega, z, a) = sin((2 omega c / a) asinh(za/2c^2)) = sin(omega S), the
// spectral density of the field susceptibility with its common prefactor
// -hbar/(8 pi^2 c^2 z sqrt(N)) stripped. Reduces to sin(omega z/c) at a = 0.
double chi_density(double omega, const ReducedGeometry &geom);

// lambda^2 / (16 pi c^2 z)
double energy_prefactor(const Scenario &scenario);

// Exact shift: reduced = s cos(theta asinh(zeta)/zeta) / sqrt(1 + zeta^2) with
// s = -1 for the symmetric state and +1 for the antisymmetric one.
EnergyShift resonance_energy(const Scenario &scenario);

// z >> c^2/a: reduced = s cos(2 Omega ln(2 zeta)) / zeta. Flags
// asymptote_unreliable when zeta < 1; throws DomainError at zeta = 0.
EnergyShift farzone_asymptote(const Scenario &scenario);

// z << c^2/a: reduced = s cos(theta).
EnergyShift inertial_limit(const Scenario &scenario);

} // namespace rindler::scalar
