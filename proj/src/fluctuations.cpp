#include "zpfield/fluctuations.hpp"

#include <cmath>
#include <numbers>

#include "zpfield/errors.hpp"
#include "zpfield/planck.hpp"
#include "zpfield/rng.hpp"

namespace zpf::fluctuations {

namespace {
constexpr double pi = std::numbers::pi;
}

double maxent_density(const EnergyDistribution& dist, double energy) {
  dist.validate();
  if (energy < 0.0) throw std::domain_error("maxent_density: energy must be >= 0");
  return std::exp(-energy / dist.mean_energy) / dist.mean_energy;
}

std::vector<double> sample_energies(const EnergyDistribution& dist, std::size_t n,
                                    std::uint64_t seed) {
  dist.validate();
  if (n < 1) throw std::domain_error("sample_energies: n must be >= 1");
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng::uniform01(rng::key(seed, static_cast<std::uint64_t>(i)));
    out[i] = -dist.mean_energy * std::log1p(-u);
  }
  return out;
}

double second_moment(const EnergyDistribution& dist) {
  dist.validate();
  return 2.0 * dist.mean_energy * dist.mean_energy;
}

double thermal_variance(double omega, double temperature, const PhysicalConstants& constants,
                        double fd_step) {
  if (!(temperature > 0.0)) throw std::domain_error("thermal_variance: temperature must be positive");
  if (!(fd_step > 0.0)) throw std::domain_error("thermal_variance: fd_step must be positive");
  const double h = fd_step * temperature;
  const double dE = (planck::mean_energy_with_zeropoint(omega, temperature + h, constants) -
                     planck::mean_energy_with_zeropoint(omega, temperature - h, constants)) /
                    (2.0 * h);
  return constants.k_b * temperature * temperature * dE;
}

VarianceDecomposition decompose_variance(double omega, double temperature,
                                         const PhysicalConstants& constants) {
  if (temperature < 0.0) throw std::domain_error("decompose_variance: temperature must be >= 0");
  const double mean = planck::mean_energy_with_zeropoint(omega, temperature, constants);
  const double zp = 0.5 * constants.hbar * omega;
  VarianceDecomposition d;
  d.total = mean * mean;
  d.zeropoint = zp * zp;
  d.thermal = d.total - d.zeropoint;
  return d;
}

double spectrum_ode_rhs(double rho, double omega, double temperature,
                        const PhysicalConstants& constants) {
  if (!(temperature > 0.0)) throw std::domain_error("spectrum_ode_rhs: temperature must be positive");
  const double c3 = constants.c * constants.c * constants.c;
  const double zp_density = constants.hbar * omega * omega * omega / (2.0 * pi * pi * c3);
  const double coeff = pi * pi * c3 /
                       (omega * omega * constants.k_b * temperature * temperature);
  return coeff * (rho * rho - zp_density * zp_density);
}

namespace {

double rk4_step(double rho, double t, double h, double omega, const PhysicalConstants& constants) {
  const double k1 = spectrum_ode_rhs(rho, omega, t, constants);
  const double k2 = spectrum_ode_rhs(rho + 0.5 * h * k1, omega, t + 0.5 * h, constants);
  const double k3 = spectrum_ode_rhs(rho + 0.5 * h * k2, omega, t + 0.5 * h, constants);
  const double k4 = spectrum_ode_rhs(rho + h * k3, omega, t + h, constants);
  return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

OdeSolution solve_spectrum_ode(double omega, double t_start, double t_end, double rho_start,
                               std::size_t steps, const PhysicalConstants& constants,
                               double local_error_tol) {
  if (!(t_start > 0.0) || !(t_end > 0.0))
    throw std::domain_error("solve_spectrum_ode: temperatures must be positive");
  if (steps < 1) throw std::domain_error("solve_spectrum_ode: steps must be >= 1");
  const double c3 = constants.c * constants.c * constants.c;
  const double zp_density = constants.hbar * omega * omega * omega / (2.0 * pi * pi * c3);
  if (rho_start < zp_density)
    throw std::domain_error(
        "solve_spectrum_ode: rho_start below the zeropoint fixed point (unphysical branch)");

  OdeSolution sol;
  sol.temperatures.reserve(steps + 1);
  sol.densities.reserve(steps + 1);
  const double h = (t_end - t_start) / static_cast<double>(steps);
  double rho = rho_start;
  sol.temperatures.push_back(t_start);
  sol.densities.push_back(rho);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = t_start + static_cast<double>(i) * h;
    const double full = rk4_step(rho, t, h, omega, constants);
    const double half = rk4_step(rk4_step(rho, t, 0.5 * h, omega, constants), t + 0.5 * h, 0.5 * h,
                                 omega, constants);
    const double err = std::abs(half - full) / 15.0;
    if (err > local_error_tol * std::max(std::abs(half), 1e-300))
      throw StepSizeError("solve_spectrum_ode: local error estimate above tolerance at T = " +
                          std::to_string(t));
    // advance with the paired half-steps the error estimate already produced
    rho = half;
    sol.temperatures.push_back(t_start + static_cast<double>(i + 1) * h);
    sol.densities.push_back(rho);
  }
  return sol;
}

}  // namespace zpf::fluctuations
