#include "zpfield/kinematics.hpp"

#include <cmath>
#include <numbers>

namespace zpf::kinematics {

namespace {

double rapidity_checked(const AcceleratedFrame& frame, double tau, const char* where) {
  frame.validate();
  const double r = frame.a * tau / frame.constants.c;
  if (!(std::abs(r) <= kMaxRapidity))
    throw std::domain_error(std::string(where) + ": |a tau / c| must be <= 30");
  return r;
}

}  // namespace

double AcceleratedFrame::unruh_temperature() const {
  validate();
  return constants.hbar * a / (2.0 * std::numbers::pi * constants.k_b * constants.c);
}

TrajectoryPoint trajectory_coordinate(const AcceleratedFrame& frame, double t) {
  frame.validate();
  const double c = frame.constants.c;
  const double u = frame.a * t / c;
  const double root = std::hypot(1.0, u);
  TrajectoryPoint p;
  p.t = t;
  p.v = frame.a * t / root;
  p.x = (c * c / frame.a) * (u * u / (root + 1.0));  // sqrt(1+u^2) - 1, no cancellation
  p.tau = (c / frame.a) * std::asinh(u);
  return p;
}

TrajectoryPoint trajectory_proper(const AcceleratedFrame& frame, double tau) {
  const double r = rapidity_checked(frame, tau, "trajectory_proper");
  const double c = frame.constants.c;
  TrajectoryPoint p;
  p.tau = tau;
  p.t = (c / frame.a) * std::sinh(r);
  p.v = c * std::tanh(r);
  const double sh = std::sinh(0.5 * r);
  p.x = (c * c / frame.a) * 2.0 * sh * sh;  // cosh(r) - 1
  return p;
}

FourVector boost_four_acceleration(const AcceleratedFrame& frame, double beta) {
  frame.validate();
  if (!(beta > -1.0 && beta < 1.0))
    throw std::domain_error("boost_four_acceleration: |beta| must be < 1");
  const double gamma = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
  return {beta * gamma * frame.a, gamma * frame.a, 0.0, 0.0};
}

double doppler_chirp(const AcceleratedFrame& frame, double omega, double tau,
                     bool copropagating) {
  if (!(omega > 0.0)) throw std::domain_error("doppler_chirp: omega must be positive");
  const double r = rapidity_checked(frame, tau, "doppler_chirp");
  return omega * std::exp(copropagating ? -r : r);
}

double chirp_phase(const AcceleratedFrame& frame, double omega, double tau) {
  if (!(omega > 0.0)) throw std::domain_error("chirp_phase: omega must be positive");
  const double r = rapidity_checked(frame, tau, "chirp_phase");
  return (omega * frame.constants.c / frame.a) * std::exp(-r);
}

}  // namespace zpf::kinematics
