#include "zpfield/invariance.hpp"

#include <cmath>

namespace zpf::invariance {

WaveVector4 WaveVector4::light_like(double omega, double mu, const PhysicalConstants& constants) {
  if (!(omega > 0.0)) throw std::domain_error("WaveVector4::light_like: omega must be positive");
  if (!(mu >= -1.0 && mu <= 1.0))
    throw std::domain_error("WaveVector4::light_like: mu must be in [-1, 1]");
  const double k = omega / constants.c;
  return {omega, mu * k, std::sqrt(std::max(0.0, 1.0 - mu * mu)) * k, 0.0};
}

bool WaveVector4::is_light_like(const PhysicalConstants& constants, double rel_tol) const {
  const double kmag = std::sqrt(kx * kx + ky * ky + kz * kz);
  return std::abs(omega - constants.c * kmag) <= rel_tol * std::abs(omega);
}

WaveVector4 boost_wavevector(const WaveVector4& w, const Boost& boost,
                             const PhysicalConstants& constants) {
  const double v = boost.beta * constants.c;
  return {boost.gamma * (w.omega - v * w.kx),
          boost.gamma * (w.kx - v * w.omega / (constants.c * constants.c)), w.ky, w.kz};
}

double lorentz_residual(const SpectrumModel& model, const Boost& boost, const WaveVector4& w,
                        const PhysicalConstants& constants) {
  if (!w.is_light_like(constants, 1e-9))
    throw std::domain_error("lorentz_residual: wavevector must be light-like");
  const double v = boost.beta * constants.c;
  const double doppler = boost.gamma * (1.0 - v * w.kx / w.omega);
  const double f0 = model.f(w.omega);
  const double raw = model.f(doppler * w.omega) - f0 * doppler;
  return f0 > 0.0 ? raw / f0 : raw;
}

double wien_adiabatic_delta(const std::function<double(double)>& rho, double omega,
                            double dV_over_V, double fd_step) {
  if (!(omega > 0.0)) throw std::domain_error("wien_adiabatic_delta: omega must be positive");
  if (!(fd_step > 0.0)) throw std::domain_error("wien_adiabatic_delta: fd_step must be positive");
  const double h = fd_step * omega;
  const double drho = (rho(omega + h) - rho(omega - h)) / (2.0 * h);
  return ((omega / 3.0) * drho - rho(omega)) * dV_over_V;
}

double wien_scaling_check(const std::function<double(double, double)>& rho, double omega,
                          double temperature, double lambda) {
  if (!(omega > 0.0 && temperature > 0.0 && lambda > 0.0))
    throw std::domain_error("wien_scaling_check: omega, temperature, lambda must be positive");
  const double lw = lambda * omega;
  const double scaled = rho(lw, lambda * temperature) / (lw * lw * lw);
  const double base = rho(omega, temperature) / (omega * omega * omega);
  return (scaled - base) / base;
}

}  // namespace zpf::invariance
