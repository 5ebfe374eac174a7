#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "zpfield/constants.hpp"

namespace zpf::invariance {

struct Boost {
  double beta;   // v/c, |beta| < 1
  double gamma;  // derived

  explicit Boost(double beta_) : beta(beta_) {
    if (!(beta > -1.0 && beta < 1.0)) throw std::domain_error("Boost: |beta| must be < 1");
    gamma = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
  }
};

struct WaveVector4 {
  double omega;  // rad/s
  double kx, ky, kz;  // rad/m

  /// Light-like mode with cos(angle to x) = mu, propagation in the x-y plane.
  static WaveVector4 light_like(double omega, double mu, const PhysicalConstants& constants);

  bool is_light_like(const PhysicalConstants& constants, double rel_tol = 1e-12) const;
};

/// f(w_k) is the energy density carried per unit wavevector volume.
struct SpectrumModel {
  std::function<double(double)> f;
  std::string label;
};

/// Lorentz transform of the four-wave vector for a boost along +x:
/// w' = g(w - v kx), kx' = g(kx - v w/c^2), ky' = ky, kz' = kz.
WaveVector4 boost_wavevector(const WaveVector4& w, const Boost& boost,
                             const PhysicalConstants& constants);

/// Residual of the invariance functional equation
///   f(D w) - f(w) D,  D = g (1 - v kx / w),
/// normalized by f(w) when f(w) > 0 (returned raw otherwise). Vanishes
/// identically iff f(w) = alpha w.
double lorentz_residual(const SpectrumModel& model, const Boost& boost, const WaveVector4& w,
                        const PhysicalConstants& constants);

/// Adiabatic Wien variation [ (w/3) rho'(w) - rho(w) ] dV/V with rho' by
/// central finite difference of relative step fd_step.
double wien_adiabatic_delta(const std::function<double(double)>& rho, double omega,
                            double dV_over_V, double fd_step = 1e-5);

/// Residual of the Wien scaling form rho(w,T) = w^3 phi(w/T):
/// rho(lw, lT)/(lw)^3 - rho(w,T)/w^3, normalized by the second term.
double wien_scaling_check(const std::function<double(double, double)>& rho, double omega,
                          double temperature, double lambda);

}  // namespace zpf::invariance
