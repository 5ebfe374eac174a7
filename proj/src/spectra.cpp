#include "zpfield/spectra.hpp"

#include <cmath>
#include <numbers>

#include "zpfield/planck.hpp"

namespace zpf::spectra {

namespace {
constexpr double pi = std::numbers::pi;
}

std::string to_string(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::rayleigh_jeans: return "rayleigh_jeans";
    case SpectrumKind::zeropoint: return "zeropoint";
    case SpectrumKind::planck_zp: return "planck_zp";
    case SpectrumKind::estimated: return "estimated";
  }
  return "unknown";
}

SpectrumKind spectrum_kind_from_string(const std::string& name) {
  if (name == "rayleigh_jeans") return SpectrumKind::rayleigh_jeans;
  if (name == "zeropoint") return SpectrumKind::zeropoint;
  if (name == "planck_zp") return SpectrumKind::planck_zp;
  if (name == "estimated") return SpectrumKind::estimated;
  throw std::invalid_argument("unknown spectrum kind: " + name);
}

void SpectralCurve::validate() const {
  if (temperature < 0.0) throw std::domain_error("SpectralCurve: temperature must be >= 0");
  if (omegas.size() != values.size())
    throw std::domain_error("SpectralCurve: omegas and values must have equal length");
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    if (!(omegas[i] > 0.0)) throw std::domain_error("SpectralCurve: omegas must be positive");
    if (i > 0 && !(omegas[i] > omegas[i - 1]))
      throw std::domain_error("SpectralCurve: omegas must be strictly increasing");
    if (values[i] < 0.0) throw std::domain_error("SpectralCurve: values must be non-negative");
  }
}

double density_of_modes(double omega, const PhysicalConstants& constants) {
  if (omega < 0.0) throw std::domain_error("density_of_modes: omega must be >= 0");
  const double c3 = constants.c * constants.c * constants.c;
  return omega * omega / (2.0 * pi * pi * c3);
}

double spectral_density(SpectrumKind kind, double omega, const ThermodynamicState& state,
                        const PhysicalConstants& constants) {
  if (!(omega > 0.0)) throw std::domain_error("spectral_density: omega must be positive");
  state.validate();
  switch (kind) {
    case SpectrumKind::rayleigh_jeans:
      if (!(state.temperature > 0.0))
        throw std::domain_error("spectral_density: rayleigh_jeans requires T > 0");
      return 2.0 * density_of_modes(omega, constants) * constants.k_b * state.temperature;
    case SpectrumKind::zeropoint:
      return 2.0 * density_of_modes(omega, constants) * (0.5 * constants.hbar * omega);
    case SpectrumKind::planck_zp:
      return 2.0 * density_of_modes(omega, constants) *
             planck::mean_energy_with_zeropoint(omega, state.temperature, constants);
    case SpectrumKind::estimated:
      throw std::invalid_argument("spectral_density: 'estimated' has no analytic form");
  }
  throw std::invalid_argument("spectral_density: unknown kind");
}

double power_spectrum_from_density(double rho_value) {
  return (2.0 * pi / 3.0) * rho_value;
}

double cumulative_vacuum_energy(double omega_cutoff, const PhysicalConstants& constants) {
  if (!(omega_cutoff > 0.0))
    throw std::domain_error("cumulative_vacuum_energy: omega_cutoff must be positive");
  const double c3 = constants.c * constants.c * constants.c;
  const double w2 = omega_cutoff * omega_cutoff;
  return constants.hbar * w2 * w2 / (8.0 * pi * pi * c3);
}

SpectralCurve sample_curve(SpectrumKind kind, const std::vector<double>& omegas,
                           double temperature, const PhysicalConstants& constants) {
  SpectralCurve curve{kind, temperature, omegas, {}, constants};
  curve.values.reserve(omegas.size());
  const ThermodynamicState state{temperature};
  for (double w : omegas) curve.values.push_back(spectral_density(kind, w, state, constants));
  curve.validate();
  return curve;
}

}  // namespace zpf::spectra
