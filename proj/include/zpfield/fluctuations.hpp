#pragma once

#include <cstdint>
#include <vector>

#include "zpfield/constants.hpp"

namespace zpf::fluctuations {

/// Maximum-entropy energy distribution P(E) = (1/<E>) exp(-E/<E>).
struct EnergyDistribution {
  double mean_energy;
  void validate() const {
    if (!(mean_energy > 0.0))
      throw std::domain_error("EnergyDistribution: mean_energy must be positive");
  }
};

struct VarianceDecomposition {
  double total;      // <E>^2 with <E> the full (thermal + zeropoint) mean energy
  double thermal;    // total - zeropoint
  double zeropoint;  // (hbar w / 2)^2
};

double maxent_density(const EnergyDistribution& dist, double energy);

/// Deterministic inverse-transform exponential sampling; sample i is a pure
/// function of (seed XOR i).
std::vector<double> sample_energies(const EnergyDistribution& dist, std::size_t n,
                                    std::uint64_t seed);

/// <E^2> = 2 <E>^2 for the exponential distribution.
double second_moment(const EnergyDistribution& dist);

/// Canonical-ensemble thermal variance k_b T^2 d<E>/dT, with <E> the
/// zeropoint-corrected mean energy and the derivative taken by central
/// finite difference of relative step fd_step.
double thermal_variance(double omega, double temperature, const PhysicalConstants& constants,
                        double fd_step = 1e-5);

/// total = <E>^2, zeropoint = (hbar w/2)^2, thermal = total - zeropoint.
/// The thermal part independently matches thermal_variance; that identity is
/// what forces the coth spectrum.
VarianceDecomposition decompose_variance(double omega, double temperature,
                                         const PhysicalConstants& constants);

/// d rho/dT = (pi^2 c^3 / w^2 k_b T^2) [rho^2 - (hbar w^3 / 2 pi^2 c^3)^2].
/// constants.hbar may be set to 0 to probe the classical limit (the solution
/// is then the Rayleigh-Jeans spectrum).
double spectrum_ode_rhs(double rho, double omega, double temperature,
                        const PhysicalConstants& constants);

struct OdeSolution {
  std::vector<double> temperatures;
  std::vector<double> densities;
};

/// Classical fixed-step RK4 on a uniform temperature grid, with a step-doubling
/// local error estimate. rho_start must not lie below the zeropoint fixed
/// point; starting exactly on it yields the constant solution.
OdeSolution solve_spectrum_ode(double omega, double t_start, double t_end, double rho_start,
                               std::size_t steps, const PhysicalConstants& constants,
                               double local_error_tol = 1e-4);

}  // namespace zpf::fluctuations
