#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

// Cosine integral Ci(x) and the regularized combination
// f(x) = Ci(x) - gamma - ln(x) used by the band-limited correlation kernel.

namespace zpf::detail {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Ci(x) for x > 0: power series below 2, Lentz continued fraction above.
inline double cosine_integral(double x) {
  if (!(x > 0.0)) throw std::domain_error("cosine_integral: x must be positive");
  if (x <= 2.0) {
    double sum = 0.0;
    double term = 1.0;  // x^{2k} / (2k)!
    for (int k = 1; k <= 40; ++k) {
      term *= -x * x / ((2.0 * k - 1.0) * (2.0 * k));
      const double contrib = term / (2.0 * k);
      sum += contrib;
      if (std::abs(contrib) < 1e-18 * (std::abs(sum) + 1.0)) break;
    }
    return kEulerGamma + std::log(x) + sum;
  }
  // E1(ix) continued fraction (modified Lentz)
  using C = std::complex<double>;
  constexpr double fpmin = 1e-300;
  C b(1.0, x);
  C c(1.0 / fpmin, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) {
      h *= C(std::cos(x), -std::sin(x));
      return -h.real();
    }
  }
  throw std::runtime_error("cosine_integral: continued fraction did not converge");
}

/// f(x) = Ci(x) - gamma - ln(x) on a Hermite-interpolated table for x in
/// [0, 50]; beyond 50 the oscillatory Ci tail (|Ci| < 0.03) is dropped and
/// f = -gamma - ln(x). f(0) = 0, f'(x) = (cos x - 1)/x.
class RegularizedCi {
 public:
  static const RegularizedCi& instance() {
    static const RegularizedCi table;
    return table;
  }

  double operator()(double x) const {
    if (x <= 0.0) return 0.0;
    if (x >= kXMax) return -kEulerGamma - std::log(x);
    const double u = x / kStep;
    auto i = static_cast<std::size_t>(u);
    if (i >= kN - 1) i = kN - 2;
    const double t = u - static_cast<double>(i);
    const double f0 = f_[i], f1 = f_[i + 1];
    const double d0 = kStep * df_[i], d1 = kStep * df_[i + 1];
    const double t2 = t * t, t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * f0 + (t3 - 2.0 * t2 + t) * d0 +
           (-2.0 * t3 + 3.0 * t2) * f1 + (t3 - t2) * d1;
  }

 private:
  static constexpr double kXMax = 50.0;
  static constexpr std::size_t kN = 2001;
  static constexpr double kStep = kXMax / static_cast<double>(kN - 1);

  RegularizedCi() : f_(kN), df_(kN) {
    f_[0] = 0.0;
    df_[0] = 0.0;
    for (std::size_t i = 1; i < kN; ++i) {
      const double x = kStep * static_cast<double>(i);
      f_[i] = cosine_integral(x) - kEulerGamma - std::log(x);
      df_[i] = (std::cos(x) - 1.0) / x;
    }
  }

  std::vector<double> f_, df_;
};

}  // namespace zpf::detail
