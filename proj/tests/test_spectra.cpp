#include "doctest.h"

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "zpfield/planck.hpp"
#include "zpfield/spectra.hpp"

using namespace zpf;
using namespace zpf::spectra;

namespace {
const PhysicalConstants nat = PhysicalConstants::natural();
constexpr double pi = std::numbers::pi;
}

TEST_CASE("density of modes") {
  CHECK(density_of_modes(0.0, nat) == 0.0);
  CHECK(density_of_modes(1.0, nat) == doctest::Approx(1.0 / (2.0 * pi * pi)).epsilon(1e-15));
  // quadratic scaling is exact
  for (double w : {0.3, 1.7, 5.0})
    CHECK(density_of_modes(2.0 * w, nat) == doctest::Approx(4.0 * density_of_modes(w, nat)));
  CHECK_THROWS_AS(density_of_modes(-1.0, nat), std::domain_error);
}

TEST_CASE("spectral density families") {
  // zeropoint value hbar w^3 / (2 pi^2 c^3)
  CHECK(spectral_density(SpectrumKind::zeropoint, 1.0, {0.0}, nat) ==
        doctest::Approx(1.0 / (2.0 * pi * pi)).epsilon(1e-15));
  // planck_zp at (w=1, T=1): (1/2pi^2) coth(1/2)
  const double expected = std::cosh(0.5) / std::sinh(0.5) / (2.0 * pi * pi);
  CHECK(spectral_density(SpectrumKind::planck_zp, 1.0, {1.0}, nat) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(0.10962716061343889).epsilon(1e-14));
  // T -> 0 recovers the zeropoint curve
  CHECK(spectral_density(SpectrumKind::planck_zp, 1.0, {0.0}, nat) ==
        spectral_density(SpectrumKind::zeropoint, 1.0, {0.0}, nat));
  CHECK_THROWS_AS(spectral_density(SpectrumKind::rayleigh_jeans, 1.0, {0.0}, nat),
                  std::domain_error);
  CHECK_THROWS_AS(spectral_density(SpectrumKind::planck_zp, 0.0, {1.0}, nat), std::domain_error);
}

TEST_CASE("mode density times mean energy reproduces the spectrum") {
  // two polarization states fold into the curve
  for (double w : {0.2, 1.0, 3.0}) {
    for (double t : {0.0, 0.4, 2.0}) {
      const double lhs = spectral_density(SpectrumKind::planck_zp, w, {t}, nat);
      const double rhs =
          2.0 * density_of_modes(w, nat) * planck::mean_energy_with_zeropoint(w, t, nat);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-15));
    }
  }
}

TEST_CASE("planck_zp sits above zeropoint and approaches Rayleigh-Jeans") {
  for (double x = 1e-4; x <= 10.0; x *= 3.0) {
    const double w = x;  // T = 1
    const double pzp = spectral_density(SpectrumKind::planck_zp, w, {1.0}, nat);
    const double zp = spectral_density(SpectrumKind::zeropoint, w, {1.0}, nat);
    CHECK(pzp >= zp);
    // (x/2) coth(x/2) = 1 + x^2/12 - ..., so the whole curve approaches RJ
    // from above with relative error bounded by x^2/12
    const double rj = spectral_density(SpectrumKind::rayleigh_jeans, w, {1.0}, nat);
    CHECK(pzp >= rj);
    CHECK(std::abs(pzp - rj) / rj <= x * x / 12.0 + 1e-12);
  }
}

TEST_CASE("Wien scaling form holds exactly for the analytic families") {
  for (double lambda : {0.5, 2.0, 7.3}) {
    for (double w : {0.3, 1.0, 4.2}) {
      const double base = spectral_density(SpectrumKind::planck_zp, w, {1.7}, nat) / (w * w * w);
      const double lw = lambda * w;
      const double scaled =
          spectral_density(SpectrumKind::planck_zp, lw, {lambda * 1.7}, nat) / (lw * lw * lw);
      CHECK(oracle::rel_err(scaled, base) < 1e-13);
    }
  }
}

TEST_CASE("power spectrum conversion") {
  CHECK(power_spectrum_from_density(0.0) == 0.0);
  CHECK(power_spectrum_from_density(3.0 / (2.0 * pi)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(power_spectrum_from_density(0.10962716061343889) ==
        doctest::Approx(0.22960258827805862).epsilon(1e-14));
}

TEST_CASE("cumulative vacuum energy") {
  CHECK(cumulative_vacuum_energy(1.0, nat) ==
        doctest::Approx(1.0 / (8.0 * pi * pi)).epsilon(1e-15));
  // quartic growth with the cutoff
  CHECK(cumulative_vacuum_energy(2.0, nat) ==
        doctest::Approx(16.0 * cumulative_vacuum_energy(1.0, nat)).epsilon(1e-15));
  // quadrature oracle over the zeropoint spectrum
  const double by_quadrature = oracle::integrate(
      [&](double w) {
        return w > 0.0 ? spectral_density(SpectrumKind::zeropoint, w, {0.0}, nat) : 0.0;
      },
      0.0, 1.0, 1e-14);
  CHECK(oracle::rel_err(cumulative_vacuum_energy(1.0, nat), by_quadrature) < 1e-10);
  CHECK_THROWS_AS(cumulative_vacuum_energy(0.0, nat), std::domain_error);
}

TEST_CASE("curve sampling and validation") {
  const auto curve = sample_curve(SpectrumKind::planck_zp, {0.5, 1.0, 2.0}, 1.0, nat);
  CHECK(curve.values.size() == 3);
  CHECK(curve.kind == SpectrumKind::planck_zp);
  SpectralCurve bad = curve;
  bad.omegas[2] = 0.7;  // not increasing
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
}
