#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "zpfield/constants.hpp"
#include "zpfield/kinematics.hpp"

namespace zpf::unruh {

using kinematics::AcceleratedFrame;

/// Discretized 1-D zeropoint field. Modes are log-uniformly spaced so the
/// continuum measure dw/w becomes uniform; each mode then carries the same
/// weight C_n = sqrt(hbar c dx). Amplitudes are unit-magnitude random phases
/// over sqrt(2), so <a* a> = 1/2 across the ensemble.
struct ModeSet {
  std::vector<double> omegas;
  std::vector<double> weights;                    // C_n
  std::vector<std::complex<double>> amplitudes;   // e^{i theta_n}/sqrt(2)
  std::uint64_t seed = 0;
  double delta_x = 0.0;
  PhysicalConstants constants;
};

ModeSet build_modeset(double omega_min, double omega_max, double delta_x, std::uint64_t seed,
                      const PhysicalConstants& constants);

/// Amplitudes of one ensemble realization; pure function of (seed,
/// realization, mode). build_modeset stores realization 0.
std::vector<std::complex<double>> amplitudes_for_realization(std::uint64_t seed,
                                                             std::uint64_t realization,
                                                             std::size_t n_modes);

/// g(t) = sum_n C_n (a_n e^{-i w_n t} + a_n* e^{i w_n t}), real by construction.
double eval_field_inertial(const ModeSet& modes, double t);

/// Field along the accelerated worldline: g(tau) = sum_n C_n (a_n e^{i phi_n} + c.c.)
/// with phi_n(tau) = (w_n c / a) e^{-a tau/c}. For a|tau|/c below 1e-8 the
/// chirp degenerates to a uniform rotation and the (absorbed) constant phase
/// w_n c/a is dropped.
double eval_field_accelerated(const ModeSet& modes, const AcceleratedFrame& frame, double tau);

/// Finite observation window: Hann taper on [0, T_obs] plus the grid and
/// normalization bookkeeping spectral estimates are reported against.
struct ObservationWindow {
  double t_obs = 0.0;
  double dtau_cap = 0.02;            // coarsest allowed sample spacing
  std::vector<double> tau_grid;      // uniform base grid
  std::vector<double> window;        // taper samples on the base grid
  double window_energy = 0.0;        // int w^2 = 3 T/8 for Hann
  double coherent_gain = 0.0;        // int w   = T/2 for Hann
  double normalization = 0.0;        // 2 pi / window_energy, periodogram -> spectrum units
  double phase_step_budget = 0.2;    // rad per sample targeted by per-mode grids
  double max_phase_step = 0.3;       // hard Nyquist guard, rad per sample
  std::size_t max_samples_per_mode = std::size_t{1} << 26;

  static ObservationWindow hann(double t_obs, double dtau_cap = 0.02);
  double value(double tau) const;
  void validate() const;
};

/// Windowed per-mode transforms
///   A_n^{+-}(W) = (1/2pi) int_0^T w(tau) e^{+- i phi_n(tau)} e^{-i W tau} dtau
/// by trapezoidal quadrature on per-mode grids sized to keep the instantaneous
/// phase step under the window's budget. Modes are processed in parallel;
/// results are bit-identical for any thread count.
struct ModeTransforms {
  std::size_t n_modes = 0;
  std::size_t n_bins = 0;
  std::vector<std::complex<double>> a_plus;   // [mode * n_bins + bin]
  std::vector<std::complex<double>> a_minus;
};

ModeTransforms compute_mode_transforms(const ModeSet& modes, const AcceleratedFrame& frame,
                                       const ObservationWindow& window,
                                       const std::vector<double>& omegas_out,
                                       int num_threads = 0);

struct SpectrumEstimate {
  std::vector<double> omegas_out;
  std::vector<double> expected;          // deterministic E|g_T(W)|^2
  std::vector<double> mc_mean;           // ensemble-mean periodogram (may be empty)
  std::vector<double> mc_stderr;
  std::vector<double> theory_convolved;  // band-limited, window-convolved theory curve
  std::vector<double> theory_raw;        // (hbar c / 2 W) coth(pi W c / a)
  std::size_t n_realizations = 0;
  std::uint64_t seed = 0;
  double accel = 0.0;
  double band_lo = 0.0, band_hi = 0.0;   // mode band the estimate was built from
  ObservationWindow window;
};

/// E(W) = sum_n C_n^2 (|A_n^+|^2 + |A_n^-|^2)/2. Deterministic; no Monte Carlo.
SpectrumEstimate expected_periodogram(const ModeSet& modes, const AcceleratedFrame& frame,
                                      const ObservationWindow& window,
                                      const std::vector<double>& omegas_out,
                                      int num_threads = 0);

/// Ensemble of windowed periodograms |g_T(W)|^2 with fresh amplitudes per
/// realization from (seed, i). Output is independent of evaluation order.
SpectrumEstimate mc_periodogram(const ModeSet& modes, const AcceleratedFrame& frame,
                                const ObservationWindow& window,
                                const std::vector<double>& omegas_out,
                                std::size_t n_realizations, std::uint64_t seed,
                                int num_threads = 0);

/// S(W) = (hbar c / 2 W) coth(pi W c / a), the accelerated-vacuum power
/// spectrum. Diverges as W -> 0; that is the caller's concern.
double theory_spectrum(const AcceleratedFrame& frame, double omega_out);

/// The theory curve a finite run can actually be compared against: the
/// expected windowed periodogram of the continuum band-limited field,
///   conv(W) = (1/2pi)^2 iint w(t)w(t') e^{-iW(t-t')} G(t,t') dt dt',
/// where G is the exact ensemble correlation of the chirped mode continuum,
///   G = hbar c [ ln(hi/lo) + f(q hi) - f(q lo) ],  f(x) = Ci(x) - gamma - ln x,
///   q(t,t') = (c/a)|e^{-a t/c} - e^{-a t'/c}|.
/// This equals the naive convolution of S(W) with the squared window
/// transform wherever that integral is finite, and stays finite through the
/// infrared where the naive convolution diverges. accel = 0 selects the
/// inertial (zeropoint-only, coth -> 1) field.
std::vector<double> convolved_theory_curve(double accel, double band_lo, double band_hi,
                                           const ObservationWindow& window,
                                           const std::vector<double>& omegas_out,
                                           const PhysicalConstants& constants);

struct TemperatureFit {
  double temperature = 0.0;
  double uncertainty = 0.0;   // curvature-based 1 sigma
  double acceleration = 0.0;  // fitted a, T = hbar a / (2 pi k_b c)
  double rms_relative = 0.0;  // rms residual / mean |data|
};

/// One-parameter least-squares fit of the window-convolved thermal family
/// (parameterized by temperature through a = 2 pi k_b c T / hbar) to the
/// estimate's expected (or mc_mean) values.
TemperatureFit fit_unruh_temperature(const SpectrumEstimate& estimate,
                                     const AcceleratedFrame& frame_guess);

/// The default configuration used by the CLI and the acceptance suite
/// (natural units): a = 1, T_obs = 12, dx = 0.02, Hann window, output band
/// [0.5, 3], mode band [0.05 * 0.5, 3 e^{T_obs}].
struct UnruhConfig {
  double a = 1.0;
  double t_obs = 12.0;
  double delta_x = 0.02;
  double omega_out_min = 0.5;
  double omega_out_max = 3.0;
  std::size_t n_bins = 11;
  double band_lo_factor = 0.05;
  double dtau_cap = 0.02;
  std::uint64_t seed = 0;
  std::size_t n_realizations = 100;
  PhysicalConstants constants;

  double band_lo() const { return band_lo_factor * omega_out_min; }
  double band_hi() const;
  std::vector<double> output_bins() const;
  AcceleratedFrame frame() const { return {a, constants}; }
};

}  // namespace zpf::unruh
