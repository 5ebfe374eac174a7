#pragma once

#include <string>
#include <vector>

#include "zpfield/constants.hpp"

namespace zpf::spectra {

enum class SpectrumKind { rayleigh_jeans, zeropoint, planck_zp, estimated };

std::string to_string(SpectrumKind kind);
SpectrumKind spectrum_kind_from_string(const std::string& name);

struct ThermodynamicState {
  double temperature = 0.0;  // K, 0 allowed
  void validate() const {
    if (temperature < 0.0) throw std::domain_error("ThermodynamicState: temperature must be >= 0");
  }
};

/// Sampled spectral density rho(w) (or power spectrum, flagged by kind) on an
/// ordered frequency grid. Immutable after construction.
struct SpectralCurve {
  SpectrumKind kind = SpectrumKind::estimated;
  double temperature = 0.0;
  std::vector<double> omegas;
  std::vector<double> values;
  PhysicalConstants constants;

  void validate() const;
};

/// Mode density w^2/(2 pi^2 c^3), the per-polarization counting the spectral
/// density formula is written with. Two polarization states are folded in by
/// spectral_density.
double density_of_modes(double omega, const PhysicalConstants& constants);

/// Spectral energy density for the analytic families:
///   rayleigh_jeans  w^2 k_b T / (pi^2 c^3)
///   zeropoint       hbar w^3 / (2 pi^2 c^3)           (T-independent)
///   planck_zp       (hbar w^3 / 2 pi^2 c^3) coth(hbar w / 2 k_b T)
/// planck_zp at T = 0 equals the zeropoint value.
double spectral_density(SpectrumKind kind, double omega, const ThermodynamicState& state,
                        const PhysicalConstants& constants);

/// S(W) = (2 pi / 3) rho(W), the power-spectrum/density conversion.
double power_spectrum_from_density(double rho_value);

/// Integral of the zeropoint spectrum up to a hard cutoff:
/// int_0^wc hbar w^3/(2 pi^2 c^3) dw = hbar wc^4/(8 pi^2 c^3).
/// Grows without bound as wc -> infinity; the divergence is the caller's
/// problem (renormalization is out of scope here).
double cumulative_vacuum_energy(double omega_cutoff, const PhysicalConstants& constants);

/// Sample one of the analytic families on a given grid.
SpectralCurve sample_curve(SpectrumKind kind, const std::vector<double>& omegas,
                           double temperature, const PhysicalConstants& constants);

}  // namespace zpf::spectra
