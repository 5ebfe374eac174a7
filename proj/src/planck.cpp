#include "zpfield/planck.hpp"

#include <cmath>

namespace zpf::planck {

double entropy_of_mean_energy(double mean_energy, double epsilon,
                              const PhysicalConstants& constants) {
  if (!(epsilon > 0.0)) throw std::domain_error("entropy_of_mean_energy: epsilon must be positive");
  if (mean_energy < 0.0) throw std::domain_error("entropy_of_mean_energy: mean_energy must be >= 0");
  const double u = mean_energy / epsilon;
  if (u == 0.0) return 0.0;  // u ln u -> 0
  return constants.k_b * ((1.0 + u) * std::log1p(u) - u * std::log(u));
}

double mean_energy_planck(double epsilon, double temperature,
                          const PhysicalConstants& constants) {
  if (!(epsilon > 0.0)) throw std::domain_error("mean_energy_planck: epsilon must be positive");
  if (!(temperature > 0.0)) throw std::domain_error("mean_energy_planck: temperature must be positive");
  const double x = epsilon / (constants.k_b * temperature);
  if (x > 700.0) {
    // exp(x) would overflow; 1/(e^x - 1) = e^-x/(1 - e^-x)
    const double e = std::exp(-x);
    return epsilon * e / (1.0 - e);
  }
  return epsilon / std::expm1(x);
}

double mean_energy_with_zeropoint(double omega, double temperature,
                                  const PhysicalConstants& constants) {
  if (!(omega > 0.0)) throw std::domain_error("mean_energy_with_zeropoint: omega must be positive");
  if (temperature < 0.0) throw std::domain_error("mean_energy_with_zeropoint: temperature must be >= 0");
  const double zp = 0.5 * constants.hbar * omega;
  if (temperature == 0.0) return zp;
  return zp + mean_energy_planck(constants.hbar * omega, temperature, constants);
}

double high_temperature_deficit(double omega, double temperature,
                                const PhysicalConstants& constants) {
  if (!(omega > 0.0)) throw std::domain_error("high_temperature_deficit: omega must be positive");
  return mean_energy_planck(constants.hbar * omega, temperature, constants) -
         constants.k_b * temperature;
}

OscillatorState oscillator_state(double epsilon, double temperature,
                                 const PhysicalConstants& constants) {
  OscillatorState s{epsilon, mean_energy_planck(epsilon, temperature, constants), temperature};
  s.validate();
  return s;
}

}  // namespace zpf::planck
