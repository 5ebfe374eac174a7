#pragma once


#include "zpfield/constants.hpp"

namespace zpf::kinematics {

/// Uniformly accelerated (hyperbolic) observer.
struct AcceleratedFrame {
  double a;  // proper acceleration, m/s^2
  PhysicalConstants constants;

  void validate() const {
    if (!(a > 0.0)) throw std::domain_error("AcceleratedFrame: a must be positive");
  }
  /// T = hbar a / (2 pi k_b c)
  double unruh_temperature() const;
  /// a/c, the chirp rate of the exponential Doppler shift
  double chirp_rate() const { return a / constants.c; }
};

struct TrajectoryPoint {
  double tau;  // proper time, s
  double t;    // coordinate time, s
  double x;    // m
  double v;    // m/s
};

struct FourVector {
  double t, x, y, z;
};

/// Hyperbolic-function arguments beyond this are rejected (overflow guard);
/// the simulations never need a tau/c > 30.
inline constexpr double kMaxRapidity = 30.0;

/// State at coordinate time t, starting from rest at the origin:
/// v = a t / sqrt(1 + (a t/c)^2), x = (c^2/a)(sqrt(1 + (a t/c)^2) - 1).
TrajectoryPoint trajectory_coordinate(const AcceleratedFrame& frame, double t);

/// State at proper time tau: t = (c/a) sinh(a tau/c), v = c tanh(a tau/c),
/// x = (c^2/a)(cosh(a tau/c) - 1).
TrajectoryPoint trajectory_proper(const AcceleratedFrame& frame, double tau);

/// Four-acceleration seen from an inertial frame: (beta gamma a, gamma a, 0, 0).
/// Minkowski norm is -a^2 for every boost.
FourVector boost_four_acceleration(const AcceleratedFrame& frame, double beta);

/// Time-dependent Doppler shift of a plane wave: w e^{-a tau/c} when the
/// observer co-propagates with the wave, w e^{+a tau/c} otherwise.
double doppler_chirp(const AcceleratedFrame& frame, double omega, double tau,
                     bool copropagating);

/// Accumulated phase of the co-propagating chirp, phi(tau) = (w c/a) e^{-a tau/c};
/// d phi/d tau = -w'(tau).
double chirp_phase(const AcceleratedFrame& frame, double omega, double tau);

}  // namespace zpf::kinematics
