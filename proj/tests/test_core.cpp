#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rindler/core.hpp"
#include "rindler/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace rindler;

TEST_CASE("regime bands") {
  CHECK(classify_regime(0.0) == Regime::Inertial);
  CHECK(classify_regime(0.0999) == Regime::Inertial);
  CHECK(classify_regime(0.1) == Regime::Intermediate);
  CHECK(classify_regime(10.0) == Regime::Intermediate);
  CHECK(classify_regime(10.0001) == Regime::FarZone);
  CHECK(to_string(Regime::FarZone) == "FarZone");
  CHECK(to_string(Parity::Antisymmetric) == "anti");
  CHECK(to_string(FieldKind::Electromagnetic) == "em");
}

TEST_CASE("scenario validation") {
  CHECK_THROWS_AS(Scenario::scalar(0, 0, 1, Parity::Symmetric, 1), DomainError);
  CHECK_THROWS_AS(Scenario::scalar(-1, 1, 1, Parity::Symmetric, 1), DomainError);
  CHECK_THROWS_AS(Scenario::scalar(1, 1, -1, Parity::Symmetric, 1), DomainError);
  CHECK_THROWS_AS(Scenario::scalar(1, 1, 1, Parity::Symmetric, 0), DomainError);
  CHECK_THROWS_AS(Scenario::scalar(std::numeric_limits<double>::infinity(), 1, 1,
                                   Parity::Symmetric, 1),
                  DomainError);
  CHECK_THROWS_AS(Scenario::scalar(1, std::nan(""), 1, Parity::Symmetric, 1), DomainError);
  CHECK_THROWS_AS(Scenario::electromagnetic(1, 1, 1, Parity::Symmetric, {0, 0, 0}, {0, 0, 1}),
                  DomainError);

  const auto s = Scenario::scalar(1, 2, 3, Parity::Antisymmetric, 0.5);
  CHECK(s.coupling_lambda() == 0.5);
  CHECK_THROWS_AS(s.dipole_a(), UsageError);
  CHECK(s.with_parity(Parity::Symmetric).parity() == Parity::Symmetric);
  const auto e = Scenario::electromagnetic(1, 2, 3, Parity::Symmetric, {1, 0, 0}, {0, 0, 2});
  CHECK(e.dipole_b()[2] == 2.0);
  CHECK_THROWS_AS(e.coupling_lambda(), UsageError);
}

TEST_CASE("reduced geometry") {
  const double c = kConstants.c;
  const double a = 2 * c * c; // zeta = z
  const auto g = reduced_geometry(a, 1.0, 3 * c);
  CHECK(g.zeta == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.big_n == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(g.asinh_zeta == doctest::Approx(std::asinh(1.0)).epsilon(1e-15));
  CHECK(g.theta == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(*g.omega_ratio == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(g.crossover_length == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g.lightcone_time == doctest::Approx(std::asinh(1.0) / c).epsilon(1e-15));
  CHECK(g.resonance_phase() == doctest::Approx(3 * std::asinh(1.0)).epsilon(1e-15));

  const auto g0 = reduced_geometry(0.0, 2.0, c);
  CHECK(g0.zeta == 0.0);
  CHECK_FALSE(g0.omega_ratio.has_value());
  CHECK(std::isinf(g0.crossover_length));
  CHECK(g0.lightcone_time == doctest::Approx(2.0 / c).epsilon(1e-15));
  CHECK(g0.resonance_phase() == doctest::Approx(2.0).epsilon(1e-15));

  const auto r = reduced_geometry(Scenario::scalar_reduced(0.7, 3.0, Parity::Symmetric, 2e-3));
  CHECK(r.theta == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(r.zeta == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(r.separation == 2e-3);
}

TEST_CASE("asinh ratio is continuous through zero") {
  CHECK(asinh_ratio(0.0) == 1.0);
  for (double z : {1e-8, 5e-5, 9.99e-5, 1.01e-4, 1e-3, 1.0, 1e3})
    CHECK(asinh_ratio(z) == doctest::Approx(std::asinh(z) / z).epsilon(2e-16));
}

TEST_CASE("Unruh temperature") {
  CHECK(unruh_temperature(0.0) == 0.0);
  const double a1 = 2 * std::numbers::pi * kConstants.c * kConstants.kB / kConstants.hbar;
  CHECK(unruh_temperature(a1) == doctest::Approx(1.0).epsilon(1e-15));
  const double t20 = unruh_temperature(1e20);
  CHECK(t20 > 0.1);
  CHECK(t20 < 1.0);
  CHECK_THROWS_AS(unruh_temperature(-1.0), DomainError);
}

TEST_CASE("atomic correlation") {
  CHECK(parity_sign(Parity::Symmetric) == 1);
  CHECK(parity_sign(Parity::Antisymmetric) == -1);
  CHECK(correlation_base(2.0, 0.5) == std::cos(1.0));
  CHECK(atomic_correlation_factor(2.0, 0.5, Parity::Symmetric, FieldKind::Scalar) ==
        doctest::Approx(0.25 * std::cos(1.0)));
  CHECK(atomic_correlation_factor(2.0, 0.5, Parity::Antisymmetric, FieldKind::Electromagnetic) ==
        doctest::Approx(-std::cos(1.0)));
}
