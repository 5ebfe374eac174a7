#pragma once

#include <stdexcept>

namespace zpf {

/// Fundamental constants every formula in the library is written against.
/// The default (and the convention used by all tests) is natural units,
/// hbar = c = k_b = 1.
struct PhysicalConstants {
  double hbar = 1.0;  // reduced Planck constant, J*s
  double c = 1.0;     // speed of light, m/s
  double k_b = 1.0;   // Boltzmann constant, J/K

  static constexpr PhysicalConstants natural() { return {1.0, 1.0, 1.0}; }

  /// CODATA 2018 exact SI values.
  static constexpr PhysicalConstants si() {
    return {1.054571817e-34, 2.99792458e8, 1.380649e-23};
  }

  void validate() const {
    if (!(hbar > 0.0) || !(c > 0.0) || !(k_b > 0.0))
      throw std::domain_error("PhysicalConstants: hbar, c, k_b must be strictly positive");
  }
};

}  // namespace zpf
