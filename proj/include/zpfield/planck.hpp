#pragma once

#include "zpfield/constants.hpp"

namespace zpf::planck {

/// One electromagnetic resonator in the microcanonical picture.
struct OscillatorState {
  double epsilon;      // energy quantum, J
  double mean_energy;  // J
  double temperature;  // K

  void validate() const {
    if (!(epsilon > 0.0)) throw std::domain_error("OscillatorState: epsilon must be positive");
    if (mean_energy < 0.0) throw std::domain_error("OscillatorState: mean_energy must be >= 0");
    if (temperature < 0.0) throw std::domain_error("OscillatorState: temperature must be >= 0");
  }
};

/// Microcanonical oscillator entropy S(<E>) = k_b[(1+u)ln(1+u) - u ln u],
/// u = <E>/epsilon. Returns the limit value 0 at <E> = 0.
double entropy_of_mean_energy(double mean_energy, double epsilon,
                              const PhysicalConstants& constants);

/// <E> = epsilon / (exp(epsilon/k_b T) - 1). Requires T > 0; callers treat
/// T = 0 as the limit 0.
double mean_energy_planck(double epsilon, double temperature,
                          const PhysicalConstants& constants);

/// <E> = hbar w/2 + hbar w/(exp(hbar w/k_b T) - 1); exactly hbar w/2 at T = 0,
/// equal to (hbar w/2) coth(hbar w/2 k_b T) for T > 0.
double mean_energy_with_zeropoint(double omega, double temperature,
                                  const PhysicalConstants& constants);

/// mean_energy_planck(hbar w, T) - k_b T. Tends to -hbar w/2 at high T, which
/// is the first hint that an extra hbar w/2 of athermal energy is missing.
double high_temperature_deficit(double omega, double temperature,
                                const PhysicalConstants& constants);

/// Convenience bundle for reports.
OscillatorState oscillator_state(double epsilon, double temperature,
                                 const PhysicalConstants& constants);

}  // namespace zpf::planck
