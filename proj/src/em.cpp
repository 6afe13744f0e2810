#include "rindler/em.hpp"
#include "rindler/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace rindler::em {

namespace {

using cplx = std::complex<double>;

constexpr double delta(std::size_t l, std::size_t m) { return l == m ? 1.0 : 0.0; }
constexpr double qq(std::size_t l, std::size_t m) {
  return kAccelerationAxis[l] * kAccelerationAxis[m];
}
constexpr double nn(std::size_t l, std::size_t m) {
  return kSeparationAxis[l] * kSeparationAxis[m];
}
// (n_m q_l - n_l q_m): +1 for xz, -1 for zx
constexpr double cross(std::size_t l, std::size_t m) {
  return kSeparationAxis[m] * kAccelerationAxis[l] -
         kSeparationAxis[l] * kAccelerationAxis[m];
}

void require_em(const Scenario &s) {
  if (s.field() != FieldKind::Electromagnetic)
    throw UsageError("electromagnetic routine called with a scalar scenario");
}

double norm(const Vec3 &v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vec3 unit(const Vec3 &v) {
  const double n = norm(v);
  if (n == 0.0)
    throw DomainError("dipole vector must be nonzero");
  return {v[0] / n, v[1] / n, v[2] / n};
}

// Index of the single nonzero component, or -1.
int single_axis(const Vec3 &v) {
  int axis = -1;
  for (int i = 0; i < 3; ++i) {
    if (v[i] != 0.0) {
      if (axis >= 0)
        return -1;
      axis = i;
    }
  }
  return axis;
}

// S in units of z/c
double reduced_lightcone(double zeta) { return asinh_ratio(zeta); }

} // namespace

//******************************************************************************
EmSpectralTensors spectral_tensors_reduced(double x, double zeta) {
  const double z2 = zeta * zeta;
  const double big_n = 1.0 + z2;
  const double n2 = big_n * big_n;
  const double n32 = big_n * std::sqrt(big_n);
  const double n52 = n2 * std::sqrt(big_n);
  const double x2 = x * x;

  EmSpectralTensors t;
  for (std::size_t l = 0; l < 3; ++l) {
    for (std::size_t m = 0; m < 3; ++m) {
      const double d = delta(l, m), q = qq(l, m), n = nn(l, m), c = cross(l, m);
      t.f_diag(l, m) =
          (x / n2) * ((d - 3.0 * n) +
                      z2 * (2.0 * (d + q - n) + (d - q - 2.0 * n) * (1.0 + 2.0 * z2)));
      t.g_diag(l, m) =
          -(d * (1.0 + z2) + q * z2 * (1.0 + 4.0 * z2) - 3.0 * n * (1.0 + 2.0 * z2)) / n52 +
          (x2 / n32) * (d * (1.0 + z2) - q * z2 - n * (1.0 + 2.0 * z2));
      t.f_cross(l, m) = c * (x / n2) * (1.0 - 2.0 * z2);
      t.g_cross(l, m) = c * (1.0 + 4.0 * z2 + x2 * (1.0 + z2)) / n52;
    }
  }
  return t;
}

EmSpectralTensors spectral_tensors(double omega, const ReducedGeometry &geom) {
  if (omega < 0.0)
    throw DomainError("spectral_tensors: omega must be >= 0");
  return spectral_tensors_reduced(omega * geom.light_time(), geom.zeta);
}

PotentialTensors potential_tensors(const ReducedGeometry &geom) {
  const auto t = spectral_tensors_reduced(geom.theta, geom.zeta);
  const double phase = geom.resonance_phase();
  const double s = std::sin(phase), c = std::cos(phase);
  const double z3 = geom.separation * geom.separation * geom.separation;

  const Tensor3 v_red = s * t.f_diag - c * t.g_diag;
  const Tensor3 w_red = geom.zeta * (s * t.f_cross - c * t.g_cross);

  PotentialTensors p;
  p.V = v_red * (1.0 / z3);
  p.W = w_red * (1.0 / z3);
  p.reduced_total = v_red + w_red;
  return p;
}

Tensor3 inertial_potential(const ReducedGeometry &geom) {
  const double th = geom.theta;
  const double near = std::cos(th) + th * std::sin(th);
  const double far = th * th * std::cos(th);
  Tensor3 t;
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t m = 0; m < 3; ++m)
      t(l, m) = (delta(l, m) - 3.0 * nn(l, m)) * near - (delta(l, m) - nn(l, m)) * far;
  return t;
}

double energy_prefactor(const Scenario &s) {
  const double z = s.separation();
  return kConstants.coulomb * norm(s.dipole_a()) * norm(s.dipole_b()) / (z * z * z);
}

EnergyShift resonance_energy(const Scenario &s) {
  require_em(s);
  const auto geom = reduced_geometry(s);
  const auto pot = potential_tensors(geom);
  EnergyShift e;
  e.reduced = parity_sign(s.parity()) *
              contract(unit(s.dipole_a()), pot.reduced_total, unit(s.dipole_b()));
  e.prefactor = energy_prefactor(s);
  e.si_joule = e.prefactor * e.reduced;
  e.regime = classify_regime(geom.zeta);
  return e;
}

Tensor3 farzone_tensor(const ReducedGeometry &geom) {
  if (geom.zeta <= 0.0)
    throw DomainError("far-zone asymptote needs a > 0 (zeta > 0)");
  const double th = geom.theta, zeta = geom.zeta;
  const double phase = (th / zeta) * std::log(2.0 * zeta);
  const double s = std::sin(phase), c = std::cos(phase);
  const double bracket = 2.0 * th * s - (th * th / zeta) * c;
  Tensor3 t;
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t m = 0; m < 3; ++m)
      t(l, m) = (delta(l, m) - qq(l, m) - 2.0 * nn(l, m)) * bracket +
                qq(l, m) * (4.0 / zeta) * c;
  return t;
}

EnergyShift farzone_asymptote(const Scenario &s) {
  require_em(s);
  const int axis_a = single_axis(s.dipole_a());
  const int axis_b = single_axis(s.dipole_b());
  if (axis_a < 0 || axis_a != axis_b)
    throw UsageError("far-zone asymptote is defined for dipoles along one common coordinate axis");
  const auto geom = reduced_geometry(s);
  const auto t = farzone_tensor(geom);
  EnergyShift e;
  e.reduced = parity_sign(s.parity()) *
              contract(unit(s.dipole_a()), t, unit(s.dipole_b()));
  e.prefactor = energy_prefactor(s);
  e.si_joule = e.prefactor * e.reduced;
  e.regime = classify_regime(geom.zeta);
  e.asymptote_unreliable = geom.zeta < 1.0;
  return e;
}

//******************************************************************************
ComplexTensor3 wightman_reduced(cplx v, double zeta, Orientation orientation,
                                double floor) {
  const cplx s = zeta == 0.0 ? v : std::sinh(zeta * v) / zeta;
  const cplx s2 = s * s;
  const cplx gap = s2 - 1.0;
  if (std::abs(gap) < floor) {
    const double sl = reduced_lightcone(zeta);
    throw SingularityError("Rindler noise evaluated at the light-cone crossing u = +-S (S = " +
                           std::to_string(sl) + " z/c); increase epsilon");
  }
  const double o = orientation == Orientation::AtoB ? 1.0 : -1.0;
  const double z2 = zeta * zeta;
  const cplx scale = (4.0 / std::numbers::pi) / (gap * gap * gap);

  ComplexTensor3 g;
  for (std::size_t l = 0; l < 3; ++l) {
    for (std::size_t m = 0; m < 3; ++m) {
      const double d = delta(l, m);
      const cplx num = (d - 2.0 * zeta * o * cross(l, m)) * s2 +
                       (d - 2.0 * nn(l, m)) * (1.0 + 2.0 * (d - qq(l, m)) * z2 * s2);
      g(l, m) = scale * num;
    }
  }
  return g;
}

ComplexTensor3 wightman_tensor(double u, const ReducedGeometry &geom,
                               double epsilon, double floor) {
  if (!(epsilon > 0.0))
    throw DomainError("wightman_tensor: epsilon must be > 0");
  const double t0 = geom.light_time();
  const double z = geom.separation;
  const cplx v{u / t0, -epsilon / t0};
  auto g = wightman_reduced(v, geom.zeta, Orientation::AtoB, floor);
  g *= cplx(kConstants.hbar * kConstants.c / (z * z * z * z));
  return g;
}

CommutatorSample commutator_timedomain(double u, const ReducedGeometry &geom,
                                       double epsilon) {
  if (!(epsilon > 0.0))
    throw DomainError("commutator_timedomain: epsilon must be > 0");
  const double t0 = geom.light_time();
  const double z = geom.separation;
  const cplx forward{u / t0, -epsilon / t0};
  const cplx backward{-u / t0, -epsilon / t0};

  const auto g_ab = wightman_reduced(forward, geom.zeta, Orientation::AtoB);
  const auto g_ba = wightman_reduced(backward, geom.zeta, Orientation::BtoA).transposed();

  // (i/hbar) * hbar c / z^4 * (G_AB - G_BA^T)
  const ComplexTensor3 diff = (g_ab - g_ba) * cplx(0.0, kConstants.c / (z * z * z * z));
  CommutatorSample out{real_part(diff), 0.0};
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t m = 0; m < 3; ++m)
      out.imaginary_residue = std::max(out.imaginary_residue, std::abs(diff(l, m).imag()));
  return out;
}

std::array<LightConePole, 2> lightcone_principal_parts(const ReducedGeometry &geom) {
  constexpr int kNodes = 64;
  const double zeta = geom.zeta;
  const double s_red = reduced_lightcone(zeta);
  // Nearest other singularities: the opposite crossing (2S away) and the
  // imaginary-period images (pi/zeta away).
  double reach = 2.0 * s_red;
  if (zeta > 0.0)
    reach = std::min(reach, std::numbers::pi / zeta);
  const double radius = 0.25 * reach;

  const double t0 = geom.light_time();
  const double z = geom.separation;
  const double unit_g = kConstants.hbar * kConstants.c / (z * z * z * z);

  std::array<LightConePole, 2> out;
  const std::array<double, 2> poles{s_red, -s_red};
  for (std::size_t p = 0; p < 2; ++p) {
    std::array<ComplexTensor3, 3> acc{};
    for (int j = 0; j < kNodes; ++j) {
      const double phi = 2.0 * std::numbers::pi * (j + 0.5) / kNodes;
      const cplx step = std::polar(radius, phi);
      const auto g = wightman_reduced(poles[p] + step, zeta);
      cplx power = step;
      for (std::size_t k = 0; k < 3; ++k) {
        acc[k] += g * power;
        power *= step;
      }
    }
    out[p].pole = poles[p] * t0;
    double time_power = t0;
    for (std::size_t k = 0; k < 3; ++k) {
      out[p].coefficients[k] = acc[k] * cplx(unit_g * time_power / kNodes);
      time_power *= t0;
    }
  }
  return out;
}

CommutatorSample commutator_smeared(double u,
                                    const std::array<LightConePole, 2> &poles,
                                    double width) {
  if (!(width > 0.0))
    throw DomainError("commutator_smeared: width must be > 0");
  // (i/hbar) sum_p sum_k c_k (-1)^{k-1} [(p - u - i w)^{-k} - (p - u + i w)^{-k}]
  ComplexTensor3 acc{};
  for (const auto &pole : poles) {
    const cplx below{pole.pole - u, -width};
    const cplx above{pole.pole - u, width};
    cplx pb = 1.0, pa = 1.0;
    double sign = 1.0;
    for (std::size_t k = 0; k < 3; ++k) {
      pb /= below;
      pa /= above;
      acc += pole.coefficients[k] * (sign * (pb - pa));
      sign = -sign;
    }
  }
  acc *= cplx(0.0, 1.0 / kConstants.hbar);
  CommutatorSample out{real_part(acc), 0.0};
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t m = 0; m < 3; ++m)
      out.imaginary_residue = std::max(out.imaginary_residue, std::abs(acc(l, m).imag()));
  return out;
}

CommutatorSample commutator_smeared(double u, const ReducedGeometry &geom,
                                    double width) {
  return commutator_smeared(u, lightcone_principal_parts(geom), width);
}

} // namespace rindler::em
