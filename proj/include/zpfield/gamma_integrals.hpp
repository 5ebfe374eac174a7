#pragma once

#include <array>
#include <complex>

#include "zpfield/constants.hpp"

namespace zpf::gammaint {

using Complex = std::complex<double>;

/// Parameter of the oscillatory integral int_0^inf t^{p-1} e^{-it} dt.
/// Re(p) in [0, 1) keeps the integral (conditionally) convergent; purely
/// imaginary p is admitted through the regularized value (-i)^p Gamma(p).
struct ComplexParameter {
  Complex p;
  void validate() const {
    if (p == Complex(0.0, 0.0)) throw std::domain_error("ComplexParameter: p must be nonzero");
    if (p.real() < 0.0 || p.real() >= 1.0)
      throw std::domain_error("ComplexParameter: Re(p) must be in [0, 1)");
  }
};

/// Gamma function for complex argument (Lanczos approximation, reflection for
/// Re z < 0.5). Relative error ~1e-13 away from the poles.
Complex complex_gamma(Complex z);

/// Normalized residual of |Gamma(ix)|^2 = pi / (x sinh(pi x)), x != 0.
double gamma_imag_identity_residual(double x);

/// int_0^inf t^{p-1} e^{-it} dt computed as the eps -> 0 limit of the damped
/// integral int_0^inf t^{p-1} e^{-(eps+i)t} dt (Richardson extrapolation over
/// a halving eps sequence). Agrees with (-i)^p Gamma(p), principal branch.
Complex regularized_oscillatory_integral(const ComplexParameter& p, double damping_eps = 0.25,
                                         int richardson_levels = 7);

/// (-i)^p Gamma(p) on the principal branch, (-i)^p = e^{-i pi p / 2}.
Complex oscillatory_integral_closed_form(Complex p);

/// z^{p-1} e^{-z} integrated along the five legs of the quarter-plane contour:
///   leg 1: t in [eps, a] on the real axis      leg 2: i t, t in [eps, a]
///   leg 3: a + i s, s in [0, a]                leg 4: s + i a, s in [0, a]
///   leg 5: i eps e^{-i phi}, phi in [0, pi/2]
/// Cauchy's theorem gives sum_j (-1)^j I_j = 0.
struct ContourLegs {
  double a = 0.0;
  double epsilon = 0.0;
  std::array<Complex, 5> legs{};  // I1..I5

  Complex alternating_sum() const {
    return -legs[0] + legs[1] - legs[2] + legs[3] - legs[4];
  }
};

/// Bounds from the closing argument: each leg that must vanish in the limit
/// is dominated by an explicit elementary expression.
struct ContourBounds {
  double i3 = 0.0;  // a (sqrt2 a)^{x-1} e^{pi|y|/4} e^{-a}
  double i4 = 0.0;  // (sqrt2 a)^{x-1} e^{pi|y|/2} (1 - e^{-a})
  double i5 = 0.0;  // (pi/2) e^{-pi y/2} eps^x e^{pi|y|/2}
};

ContourLegs contour_decomposition(const ComplexParameter& p, double a, double epsilon);
ContourBounds contour_bounds(const ComplexParameter& p, double a, double epsilon);

}  // namespace zpf::gammaint
