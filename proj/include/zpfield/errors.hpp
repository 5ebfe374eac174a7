#pragma once

#include <stdexcept>
#include <string>

namespace zpf {

/// A mode would need a finer proper-time grid than the window allows.
class NyquistError : public std::runtime_error {
 public:
  NyquistError(std::size_t mode_index, double omega, const std::string& what)
      : std::runtime_error(what), mode_index(mode_index), omega(omega) {}
  std::size_t mode_index;
  double omega;
};

/// RK4 local error estimate exceeded the configured bound.
class StepSizeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Least-squares fit residual too large to trust the result.
class FitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A quadrature or extrapolation failed to reach its tolerance.
class QuadratureError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zpf
