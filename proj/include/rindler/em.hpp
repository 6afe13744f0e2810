#pragma once

#include "rindler/core.hpp"
#include "rindler/tensor.hpp"

#include <array>
#include <complex>

// Resonance interaction of two accelerated atoms coupled to the
// electromagnetic field (multipolar coupling, dipole approximation).
//
// Geometry: acceleration along q = x, separation along n = z, atom A at the
// origin and atom B at +z n. Formulas are in Gaussian form: potentials carry
// units of 1/length^3; field correlators carry hbar c / z^4.
namespace rindler::em {

// Spectral functions of the field susceptibility at one frequency.
//   f_diag, g_diag   : f_lm, g_lm (nonzero only for l = m)
//   f_cross, g_cross : F_lm, G_lm, proportional to (n_m q_l - n_l q_m)
// The susceptibility density is (f + zeta F) cos(omega S) + (g + zeta G) sin(omega S).
struct EmSpectralTensors {
  Tensor3 f_diag;
  Tensor3 g_diag;
  Tensor3 f_cross;
  Tensor3 g_cross;

  // (f + zeta F) and (g + zeta G): coefficients of cos(omega S), sin(omega S)
  Tensor3 cos_coefficient(double zeta) const { return f_diag + zeta * f_cross; }
  Tensor3 sin_coefficient(double zeta) const { return g_diag + zeta * g_cross; }
};

EmSpectralTensors spectral_tensors(double omega, const ReducedGeometry &geom);
// Same with the dimensionless frequency x = omega z / c.
EmSpectralTensors spectral_tensors_reduced(double x, double zeta);

struct PotentialTensors {
  Tensor3 V;         // (1/z^3)[f sin(w0 S) - g cos(w0 S)]
  Tensor3 W;         // (a/2 z^2 c^2)[F sin(w0 S) - G cos(w0 S)]
  Tensor3 reduced_total; // z^3 (V + W)
};

PotentialTensors potential_tensors(const ReducedGeometry &geom);

// z^3 V_lm of two inertial atoms:
// (delta - 3nn)[cos theta + theta sin theta] - (delta - nn) theta^2 cos theta
Tensor3 inertial_potential(const ReducedGeometry &geom);

// |mu_A| |mu_B| / (4 pi eps0 z^3): converts the reduced shift to joules.
double energy_prefactor(const Scenario &scenario);

// delta E = +- mu^A_l mu^B_m (V + W)_lm, upper sign for the symmetric state.
// `reduced` uses unit dipole directions and z^3 (V + W).
EnergyShift resonance_energy(const Scenario &scenario);

// Tensor inside the far-zone (za/c^2 >> 1) expression, per unit mu^2/z^3:
// (delta - qq - 2nn)[2 theta sin Phi - (theta^2/zeta) cos Phi] + qq (4/zeta) cos Phi,
// Phi = 2 Omega ln(za/c^2).
Tensor3 farzone_tensor(const ReducedGeometry &geom);

// Evaluates the far-zone expression for dipoles parallel to one coordinate
// axis. UsageError otherwise; DomainError at zeta = 0.
EnergyShift farzone_asymptote(const Scenario &scenario);

//******************************************************************************
// Time domain.

// Which atom sits at +z n. Swapping atoms flips n.
enum class Orientation { AtoB = +1, BtoA = -1 };

inline constexpr double kDefaultSingularityFloor = 1e-9;

// Rindler noise <0|E_l(x_A(tau)) E_m(x_B(tau'))|0> at u = tau - tau' with
// u -> u - i eps in every sinh^2(a u / 2c). Units: hbar c / z^4 (Gaussian).
// Throws SingularityError when the denominator comes within `floor` (relative)
// of zero, i.e. near the light-cone crossings u = +-S.
ComplexTensor3 wightman_tensor(double u, const ReducedGeometry &geom,
                               double epsilon,
                               double floor = kDefaultSingularityFloor);

// Dimensionless kernel: time v in units of z/c (any complex value), result in
// units of hbar c / z^4.
ComplexTensor3 wightman_reduced(std::complex<double> v, double zeta,
                                Orientation orientation = Orientation::AtoB,
                                double floor = kDefaultSingularityFloor);

struct CommutatorSample {
  Tensor3 value;             // units c / z^4 (Gaussian)
  double imaginary_residue;  // largest |Im| discarded from the result
};

// (i/hbar) <0|[E_l(x_A(tau)), E_m(x_B(tau'))]|0>, with the second ordering
// obtained by swapping the atoms (u -> -u, n -> -n, indices transposed).
CommutatorSample commutator_timedomain(double u, const ReducedGeometry &geom,
                                       double epsilon);

// Laurent principal part of the Rindler noise at one light-cone crossing:
// G(u) = sum_k coefficients[k-1] (u - pole)^{-k} + regular, k = 1..3.
struct LightConePole {
  double pole;                              // s
  std::array<ComplexTensor3, 3> coefficients; // units hbar c / z^4 * s^k
};

// Principal parts at u = +S and u = -S, extracted by trapezoid contour
// integrals of wightman_reduced on small circles around each pole.
std::array<LightConePole, 2> lightcone_principal_parts(const ReducedGeometry &geom);

// The commutator distribution (supported on u = +-S) smeared with a
// Lorentzian of half-width `width`. This is the time-domain counterpart of
// damping the frequency integral with e^{-width * omega}.
CommutatorSample commutator_smeared(double u, const ReducedGeometry &geom,
                                    double width);
CommutatorSample commutator_smeared(double u,
                                    const std::array<LightConePole, 2> &poles,
                                    double width);

} // namespace rindler::em
