#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rindler/errors.hpp"
#include "rindler/scalar.hpp"

#include <cmath>
#include <numbers>

using namespace rindler;

TEST_CASE("spectral density") {
  const auto g = reduced_geometry(Scenario::scalar_reduced(2.0, 1.0, Parity::Symmetric));
  CHECK(scalar::chi_density(g.omega0, g) ==
        doctest::Approx(0.98163393183845652193).epsilon(1e-15));
  const auto g0 = reduced_geometry(Scenario::scalar_reduced(2.0, 0.0, Parity::Symmetric));
  CHECK(scalar::chi_density(g0.omega0, g0) == doctest::Approx(std::sin(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(scalar::chi_density(-1.0, g), DomainError);
}

TEST_CASE("closed form") {
  const auto s = Scenario::scalar_reduced(1.0, 1.0, Parity::Symmetric);
  const auto e = scalar::resonance_energy(s);
  CHECK(e.reduced == doctest::Approx(-0.44978487228972601023).epsilon(1e-15));
  CHECK(e.regime == Regime::Intermediate);
  CHECK(e.si_joule == doctest::Approx(e.prefactor * e.reduced));
  CHECK(scalar::resonance_energy(s.with_parity(Parity::Antisymmetric)).reduced == -e.reduced);

  const auto pi0 = Scenario::scalar_reduced(std::numbers::pi, 0.0, Parity::Symmetric);
  CHECK(scalar::resonance_energy(pi0).reduced == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("prefactor") {
  const auto s = Scenario::scalar(0, 2.0, 1.0, Parity::Symmetric, 3.0);
  const double c = kConstants.c;
  CHECK(scalar::energy_prefactor(s) ==
        doctest::Approx(9.0 / (16 * std::numbers::pi * c * c * 2.0)).epsilon(1e-15));
}

TEST_CASE("limits") {
  const auto near = Scenario::scalar_reduced(1.3, 1e-6, Parity::Symmetric);
  CHECK(scalar::inertial_limit(near).reduced == doctest::Approx(-std::cos(1.3)));
  CHECK(scalar::resonance_energy(near).reduced ==
        doctest::Approx(scalar::inertial_limit(near).reduced).epsilon(1e-9));

  // phase-aligned far-zone sample: exact and asymptote agree to O(1/zeta^2)
  const double omega = 10.0, zeta = std::sinh(40 * std::numbers::pi / (2 * omega));
  const auto far =
      Scenario::scalar_reduced(2 * omega * zeta, zeta, Parity::Antisymmetric);
  const auto exact = scalar::resonance_energy(far), asym = scalar::farzone_asymptote(far);
  CHECK(exact.reduced == doctest::Approx(asym.reduced).epsilon(1e-3));
  CHECK_FALSE(asym.asymptote_unreliable);

  CHECK(scalar::farzone_asymptote(Scenario::scalar_reduced(1.0, 0.5, Parity::Symmetric))
            .asymptote_unreliable);
  CHECK_THROWS_AS(scalar::farzone_asymptote(Scenario::scalar_reduced(1.0, 0.0, Parity::Symmetric)),
                  DomainError);
}

TEST_CASE("field mismatch") {
  const auto e = Scenario::electromagnetic(0, 1, 1, Parity::Symmetric, {0, 0, 1}, {0, 0, 1});
  CHECK_THROWS_AS(scalar::resonance_energy(e), UsageError);
}
