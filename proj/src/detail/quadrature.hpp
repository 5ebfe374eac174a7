#pragma once

#include <cmath>
#include <complex>
#include <cstddef>

// Composite 16-point Gauss-Legendre panels. One panel resolves a few radians
// of oscillation at full double precision, so callers size panels to keep the
// phase change per panel below ~pi.

namespace zpf::detail {

inline constexpr double kGL16Nodes[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};

inline constexpr double kGL16Weights[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

template <typename F>
auto gauss16(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  using R = decltype(f(mid));
  R acc{};
  for (int i = 0; i < 8; ++i) {
    const double dx = half * kGL16Nodes[i];
    acc += kGL16Weights[i] * (f(mid + dx) + f(mid - dx));
  }
  return acc * half;
}

/// Integrate f over [a, b] with panels no longer than max_panel.
template <typename F>
auto integrate_panels(F&& f, double a, double b, double max_panel) {
  using R = decltype(f(a));
  R acc{};
  if (!(b > a)) return acc;
  const auto n = static_cast<std::size_t>(std::ceil((b - a) / max_panel));
  const double h = (b - a) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    acc += gauss16(f, a + static_cast<double>(i) * h, a + static_cast<double>(i + 1) * h);
  return acc;
}

}  // namespace zpf::detail
