#include "zpfield/gamma_integrals.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "detail/quadrature.hpp"
#include "zpfield/errors.hpp"

namespace zpf::gammaint {

namespace {

constexpr double pi = std::numbers::pi;

// Lanczos, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

Complex lanczos_gamma(Complex z) {
  // requires Re(z) >= 0.5
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int k = 1; k < 9; ++k) x += kLanczos[k] / (z + static_cast<double>(k));
  const Complex t = z + 7.5;
  return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

Complex complex_gamma(Complex z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("complex_gamma: pole at non-positive integer");
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * lanczos_gamma(1.0 - z));
  return lanczos_gamma(z);
}

double gamma_imag_identity_residual(double x) {
  if (x == 0.0) throw std::domain_error("gamma_imag_identity_residual: x must be nonzero");
  const Complex g = complex_gamma(Complex(0.0, x));
  const double lhs = std::norm(g);
  const double rhs = pi / (x * std::sinh(pi * x));
  return (lhs - rhs) / rhs;
}

Complex oscillatory_integral_closed_form(Complex p) {
  return std::exp(Complex(0.0, -pi / 2.0) * p) * complex_gamma(p);
}

namespace {

// Head of the damped integral on [0, t0] by series:
// int_0^t0 t^{p-1} e^{-s t} dt = sum_k (-s)^k/k! t0^{p+k}/(p+k).
// For Re(p) = 0 the series is the analytic continuation in p, which is
// exactly the regularization the limit definition calls for.
Complex damped_head_series(Complex p, Complex s, double t0) {
  const Complex t0p = std::exp(p * std::log(t0));
  Complex term(1.0, 0.0);  // (-s)^k t0^k / k!
  Complex acc(0.0, 0.0);
  for (int k = 0; k < 80; ++k) {
    const Complex contrib = term * t0p / (p + static_cast<double>(k));
    acc += contrib;
    if (std::abs(contrib) < 1e-20 * (std::abs(acc) + 1e-300) && k > 4) return acc;
    term *= -s * t0 / static_cast<double>(k + 1);
  }
  throw QuadratureError("damped_head_series: series did not converge");
}

Complex damped_oscillatory_integral(Complex p, double eps) {
  const Complex s(eps, 1.0);
  const double t0 = 0.5;
  const double tmax = 50.0 / eps;
  if (tmax > 2e7)
    throw QuadratureError(
        "regularized_oscillatory_integral: damping_eps too small for the truncated tail");
  const Complex pm1 = p - 1.0;
  auto integrand = [&](double t) { return std::exp(pm1 * std::log(t) - s * t); };
  // phase advances ~1 rad per unit t; 1-unit panels keep GL16 at full accuracy
  return damped_head_series(p, s, t0) + detail::integrate_panels(integrand, t0, tmax, 1.0);
}

}  // namespace

Complex regularized_oscillatory_integral(const ComplexParameter& param, double damping_eps,
                                         int richardson_levels) {
  param.validate();
  if (!(damping_eps > 0.0))
    throw std::domain_error("regularized_oscillatory_integral: damping_eps must be positive");
  if (richardson_levels < 2)
    throw std::domain_error("regularized_oscillatory_integral: need at least 2 levels");

  std::vector<double> eps(richardson_levels);
  std::vector<Complex> table(richardson_levels);
  for (int k = 0; k < richardson_levels; ++k) {
    eps[k] = damping_eps / static_cast<double>(1 << k);
    table[k] = damped_oscillatory_integral(param.p, eps[k]);
  }
  // Neville polynomial extrapolation to eps = 0.
  Complex previous = table[richardson_levels - 1];
  for (int m = 1; m < richardson_levels; ++m) {
    for (int k = richardson_levels - 1; k >= m; --k)
      table[k] = table[k] + (table[k] - table[k - 1]) * (eps[k] / (eps[k - m] - eps[k]));
    if (m == richardson_levels - 2) previous = table[richardson_levels - 1];
  }
  const Complex value = table[richardson_levels - 1];
  const double scale = std::max(std::abs(value), 1e-3);
  if (std::abs(value - previous) > 1e-6 * scale)
    throw QuadratureError("regularized_oscillatory_integral: extrapolation did not converge");
  return value;
}

namespace {

// Legs 1 and 2 need care at the eps end where t^{p-1} is steep; switching to
// u = ln t makes the integrand smooth all the way down.
template <typename F>
Complex leg_with_log_substitution(F&& f, double eps, double a) {
  auto g = [&](double u) {
    const double t = std::exp(u);
    return f(t) * t;
  };
  Complex head = detail::integrate_panels(g, std::log(eps), 0.0, 1.0);
  Complex tail = detail::integrate_panels(f, 1.0, a, 1.0);
  return head + tail;
}

}  // namespace

ContourLegs contour_decomposition(const ComplexParameter& param, double a, double epsilon) {
  param.validate();
  if (!(param.p.real() > 0.0))
    throw std::domain_error("contour_decomposition: Re(p) must be in (0, 1)");
  if (!(epsilon > 0.0 && epsilon < 1.0 && a > 1.0))
    throw std::domain_error("contour_decomposition: need 0 < epsilon < 1 < a");

  const Complex p = param.p;
  const Complex pm1 = p - 1.0;
  ContourLegs legs;
  legs.a = a;
  legs.epsilon = epsilon;

  // I1: real axis
  legs.legs[0] = leg_with_log_substitution(
      [&](double t) { return std::exp(pm1 * std::log(t) - t); }, epsilon, a);

  // I2: imaginary axis, z = i t
  legs.legs[1] = leg_with_log_substitution(
      [&](double t) {
        return Complex(0.0, 1.0) * std::pow(Complex(0.0, t), pm1) *
               std::exp(Complex(0.0, -t));
      },
      epsilon, a);

  // I3: z = a + i s; e^{-a} factored out so the quadrature works at O(1)
  legs.legs[2] = std::exp(-a) * Complex(0.0, 1.0) *
                 detail::integrate_panels(
                     [&](double s) {
                       return std::pow(Complex(a, s), pm1) * std::exp(Complex(0.0, -s));
                     },
                     0.0, a, 1.0);

  // I4: z = s + i a
  legs.legs[3] = std::exp(Complex(0.0, -a)) *
                 detail::integrate_panels(
                     [&](double s) { return std::pow(Complex(s, a), pm1) * std::exp(-s); },
                     0.0, a, 1.0);

  // I5: quarter arc z = i eps e^{-i phi}
  legs.legs[4] = detail::integrate_panels(
      [&](double phi) {
        const Complex z = Complex(0.0, epsilon) * std::exp(Complex(0.0, -phi));
        const Complex dz = epsilon * std::exp(Complex(0.0, -phi));
        return std::pow(z, pm1) * std::exp(-z) * dz;
      },
      0.0, pi / 2.0, 0.5);

  return legs;
}

ContourBounds contour_bounds(const ComplexParameter& param, double a, double epsilon) {
  const double x = param.p.real();
  const double y = param.p.imag();
  ContourBounds b;
  b.i3 = a * std::pow(std::sqrt(2.0) * a, x - 1.0) * std::exp(pi * std::abs(y) / 4.0) *
         std::exp(-a);
  // |z|^{x-1} on the top leg is maximized at |z| = a when x < 1; the sqrt(2)a
  // variant only bounds it for x >= 1
  b.i4 = std::pow(x < 1.0 ? a : std::sqrt(2.0) * a, x - 1.0) *
         std::exp(pi * std::abs(y) / 2.0) * (1.0 - std::exp(-a));
  b.i5 = (pi / 2.0) * std::exp(-pi * y / 2.0) * std::pow(epsilon, x) *
         std::exp(pi * std::abs(y) / 2.0);
  return b;
}

}  // namespace zpf::gammaint
