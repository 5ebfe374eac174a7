#include "zpfield/unruh.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numbers>
#include <thread>

#include "detail/cosint.hpp"
#include "zpfield/errors.hpp"
#include "zpfield/rng.hpp"

namespace zpf::unruh {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

// Below this chirp-phase scale the accelerated phase is numerically the
// inertial one; the per-mode constant w c/a is dropped (it only rotates the
// random amplitude).
constexpr double kSmallChirp = 1e-8;

constexpr std::size_t kRefreshStride = 8192;  // kill rotor drift periodically

}  // namespace

ModeSet build_modeset(double omega_min, double omega_max, double delta_x, std::uint64_t seed,
                      const PhysicalConstants& constants) {
  if (!(omega_min > 0.0) || !(omega_max > omega_min))
    throw std::domain_error("build_modeset: need 0 < omega_min < omega_max");
  if (!(delta_x > 0.0)) throw std::domain_error("build_modeset: delta_x must be positive");

  const auto n = static_cast<std::size_t>(
                     std::floor(std::log(omega_max / omega_min) / delta_x * (1.0 + 1e-12))) +
                 1;
  ModeSet modes;
  modes.seed = seed;
  modes.delta_x = delta_x;
  modes.constants = constants;
  modes.omegas.resize(n);
  modes.weights.assign(n, std::sqrt(constants.hbar * constants.c * delta_x));
  for (std::size_t i = 0; i < n; ++i)
    modes.omegas[i] = omega_min * std::exp(delta_x * static_cast<double>(i));
  modes.amplitudes = amplitudes_for_realization(seed, 0, n);
  return modes;
}

std::vector<std::complex<double>> amplitudes_for_realization(std::uint64_t seed,
                                                             std::uint64_t realization,
                                                             std::size_t n_modes) {
  std::vector<std::complex<double>> amps(n_modes);
  const double mag = 1.0 / std::sqrt(2.0);
  for (std::size_t n = 0; n < n_modes; ++n) {
    const double theta = two_pi * rng::uniform01(rng::key(seed, realization, n));
    amps[n] = std::polar(mag, theta);
  }
  return amps;
}

double eval_field_inertial(const ModeSet& modes, double t) {
  double g = 0.0;
  for (std::size_t n = 0; n < modes.omegas.size(); ++n) {
    const double wt = modes.omegas[n] * t;
    const auto& a = modes.amplitudes[n];
    g += 2.0 * modes.weights[n] * (a.real() * std::cos(wt) + a.imag() * std::sin(wt));
  }
  return g;
}

double eval_field_accelerated(const ModeSet& modes, const AcceleratedFrame& frame, double tau) {
  frame.validate();
  const double c = frame.constants.c;
  const bool small_chirp = frame.a * std::abs(tau) / c < kSmallChirp;
  double g = 0.0;
  for (std::size_t n = 0; n < modes.omegas.size(); ++n) {
    double phi;
    if (small_chirp) {
      phi = (modes.omegas[n] * c / frame.a) * std::expm1(-frame.a * tau / c);
    } else {
      phi = kinematics::chirp_phase(frame, modes.omegas[n], tau);
    }
    const auto& a = modes.amplitudes[n];
    // a e^{i phi} + a* e^{-i phi} = 2 Re(a e^{i phi})
    g += 2.0 * modes.weights[n] * (a.real() * std::cos(phi) - a.imag() * std::sin(phi));
  }
  return g;
}

ObservationWindow ObservationWindow::hann(double t_obs, double dtau_cap) {
  if (!(t_obs > 0.0)) throw std::domain_error("ObservationWindow: t_obs must be positive");
  if (!(dtau_cap > 0.0)) throw std::domain_error("ObservationWindow: dtau_cap must be positive");
  ObservationWindow w;
  w.t_obs = t_obs;
  w.dtau_cap = dtau_cap;
  const auto m = static_cast<std::size_t>(std::ceil(t_obs / dtau_cap));
  w.tau_grid.resize(m + 1);
  w.window.resize(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    const double tau = t_obs * static_cast<double>(j) / static_cast<double>(m);
    w.tau_grid[j] = tau;
    w.window[j] = 0.5 * (1.0 - std::cos(two_pi * tau / t_obs));
  }
  w.window_energy = 3.0 * t_obs / 8.0;
  w.coherent_gain = 0.5 * t_obs;
  w.normalization = two_pi / w.window_energy;
  return w;
}

double ObservationWindow::value(double tau) const {
  if (tau < 0.0 || tau > t_obs) return 0.0;
  return 0.5 * (1.0 - std::cos(two_pi * tau / t_obs));
}

void ObservationWindow::validate() const {
  if (!(t_obs > 0.0) || !(dtau_cap > 0.0) || tau_grid.size() != window.size() ||
      tau_grid.size() < 2)
    throw std::domain_error("ObservationWindow: invalid window");
}

namespace {

// One mode's A^{+-}(W) row by trapezoid on its own Nyquist-limited grid.
void mode_transform_row(const AcceleratedFrame& frame, const ObservationWindow& window,
                        const std::vector<double>& omegas_out, double omega_n,
                        std::size_t mode_index, std::complex<double>* a_plus,
                        std::complex<double>* a_minus) {
  const double T = window.t_obs;
  const double c = frame.constants.c;
  const double w_max = *std::max_element(omegas_out.begin(), omegas_out.end());
  const double dt_target =
      std::min(window.dtau_cap, window.phase_step_budget / (omega_n + w_max));
  const double m_needed = std::ceil(T / dt_target);
  if (m_needed + 1.0 > static_cast<double>(window.max_samples_per_mode))
    throw NyquistError(mode_index, omega_n,
                       "expected_periodogram: mode " + std::to_string(mode_index) + " (omega = " +
                           std::to_string(omega_n) +
                           ") needs a finer grid than the window sample budget allows");
  const auto m = static_cast<std::size_t>(m_needed);
  const double dt = T / static_cast<double>(m);
  if ((omega_n + w_max) * dt > window.max_phase_step)
    throw NyquistError(mode_index, omega_n,
                       "expected_periodogram: Nyquist guard violated for mode " +
                           std::to_string(mode_index));

  const std::size_t nb = omegas_out.size();
  const bool small_chirp = frame.a * T / c < kSmallChirp;
  const double phase_scale = omega_n * c / frame.a;
  const double decay = std::exp(-frame.a * dt / c);

  // per-bin rotors e^{-i W tau}
  std::vector<double> rot_r(nb), rot_i(nb), drot_r(nb), drot_i(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    rot_r[b] = 1.0;
    rot_i[b] = 0.0;
    drot_r[b] = std::cos(omegas_out[b] * dt);
    drot_i[b] = -std::sin(omegas_out[b] * dt);
  }
  // Hann taper via its own rotor
  const double dwc = std::cos(two_pi * dt / T);
  const double dws = std::sin(two_pi * dt / T);
  double wc = 1.0, ws = 0.0;

  std::vector<double> apr(nb, 0.0), api(nb, 0.0), amr(nb, 0.0), ami(nb, 0.0);
  double chirp = 1.0;  // e^{-a tau / c}

  for (std::size_t j = 0; j <= m; ++j) {
    if ((j % kRefreshStride) == 0) {
      const double tau = dt * static_cast<double>(j);
      chirp = std::exp(-frame.a * tau / c);
      wc = std::cos(two_pi * tau / T);
      ws = std::sin(two_pi * tau / T);
      for (std::size_t b = 0; b < nb; ++b) {
        rot_r[b] = std::cos(omegas_out[b] * tau);
        rot_i[b] = -std::sin(omegas_out[b] * tau);
      }
    }
    double phi;
    if (small_chirp) {
      phi = phase_scale * std::expm1(-frame.a * (dt * static_cast<double>(j)) / c);
    } else {
      phi = phase_scale * chirp;
    }
    const double taper = 0.5 * (1.0 - wc);
    const double half = (j == 0 || j == m) ? 0.5 : 1.0;  // trapezoid ends
    const double ur = half * taper * std::cos(phi);
    const double ui = half * taper * std::sin(phi);
    for (std::size_t b = 0; b < nb; ++b) {
      const double p1 = ur * rot_r[b];
      const double p2 = ui * rot_i[b];
      const double p3 = ur * rot_i[b];
      const double p4 = ui * rot_r[b];
      apr[b] += p1 - p2;
      api[b] += p3 + p4;
      amr[b] += p1 + p2;
      ami[b] += p3 - p4;
      const double nr = rot_r[b] * drot_r[b] - rot_i[b] * drot_i[b];
      rot_i[b] = rot_r[b] * drot_i[b] + rot_i[b] * drot_r[b];
      rot_r[b] = nr;
    }
    chirp *= decay;
    const double nwc = wc * dwc - ws * dws;
    ws = wc * dws + ws * dwc;
    wc = nwc;
  }

  const double scale = dt / two_pi;
  for (std::size_t b = 0; b < nb; ++b) {
    a_plus[b] = std::complex<double>(apr[b], api[b]) * scale;
    a_minus[b] = std::complex<double>(amr[b], ami[b]) * scale;
  }
}

}  // namespace

ModeTransforms compute_mode_transforms(const ModeSet& modes, const AcceleratedFrame& frame,
                                       const ObservationWindow& window,
                                       const std::vector<double>& omegas_out, int num_threads) {
  frame.validate();
  window.validate();
  if (omegas_out.empty())
    throw std::invalid_argument("compute_mode_transforms: omegas_out must be non-empty");
  for (double w : omegas_out)
    if (!(w > 0.0))
      throw std::domain_error("compute_mode_transforms: output frequencies must be positive");

  ModeTransforms out;
  out.n_modes = modes.omegas.size();
  out.n_bins = omegas_out.size();
  out.a_plus.resize(out.n_modes * out.n_bins);
  out.a_minus.resize(out.n_modes * out.n_bins);

  unsigned hw = std::thread::hardware_concurrency();
  const std::size_t nthreads =
      num_threads > 0 ? static_cast<std::size_t>(num_threads) : std::max(1u, hw);

  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&](std::size_t lo, std::size_t hi) {
    try {
      for (std::size_t n = lo; n < hi; ++n)
        mode_transform_row(frame, window, omegas_out, modes.omegas[n], n,
                           &out.a_plus[n * out.n_bins], &out.a_minus[n * out.n_bins]);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  if (nthreads <= 1 || out.n_modes < 2) {
    worker(0, out.n_modes);
  } else {
    // Interleave modes across threads so the expensive high-frequency rows
    // spread evenly; each row writes its own slot, so results do not depend
    // on the schedule.
    std::vector<std::thread> pool;
    const std::size_t used = std::min(nthreads, out.n_modes);
    std::atomic<std::size_t> next{0};
    pool.reserve(used);
    for (std::size_t t = 0; t < used; ++t) {
      pool.emplace_back([&]() {
        while (true) {
          const std::size_t n = next.fetch_add(1);
          if (n >= out.n_modes) break;
          try {
            mode_transform_row(frame, window, omegas_out, modes.omegas[n], n,
                               &out.a_plus[n * out.n_bins], &out.a_minus[n * out.n_bins]);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            break;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

namespace {

SpectrumEstimate make_estimate_shell(const ModeSet& modes, const AcceleratedFrame& frame,
                                     const ObservationWindow& window,
                                     const std::vector<double>& omegas_out) {
  SpectrumEstimate est;
  est.omegas_out = omegas_out;
  est.accel = frame.a;
  est.window = window;
  est.theory_raw.resize(omegas_out.size());
  for (std::size_t b = 0; b < omegas_out.size(); ++b)
    est.theory_raw[b] = theory_spectrum(frame, omegas_out[b]);
  if (modes.omegas.size() >= 2) {
    est.band_lo = modes.omegas.front();
    est.band_hi = modes.omegas.back();
    est.theory_convolved = convolved_theory_curve(frame.a, est.band_lo, est.band_hi, window,
                                                  omegas_out, frame.constants);
  } else {
    // a degenerate band has no continuum theory curve to compare against
    est.theory_convolved.assign(omegas_out.size(), 0.0);
  }
  return est;
}

std::vector<double> expected_from_transforms(const ModeSet& modes, const ModeTransforms& tr) {
  std::vector<double> expected(tr.n_bins, 0.0);
  for (std::size_t n = 0; n < tr.n_modes; ++n) {
    const double c2 = modes.weights[n] * modes.weights[n];
    for (std::size_t b = 0; b < tr.n_bins; ++b) {
      const auto& ap = tr.a_plus[n * tr.n_bins + b];
      const auto& am = tr.a_minus[n * tr.n_bins + b];
      expected[b] += c2 * 0.5 * (std::norm(ap) + std::norm(am));
    }
  }
  return expected;
}

}  // namespace

SpectrumEstimate expected_periodogram(const ModeSet& modes, const AcceleratedFrame& frame,
                                      const ObservationWindow& window,
                                      const std::vector<double>& omegas_out, int num_threads) {
  const ModeTransforms tr = compute_mode_transforms(modes, frame, window, omegas_out, num_threads);
  SpectrumEstimate est = make_estimate_shell(modes, frame, window, omegas_out);
  est.seed = modes.seed;
  est.expected = expected_from_transforms(modes, tr);
  return est;
}

SpectrumEstimate mc_periodogram(const ModeSet& modes, const AcceleratedFrame& frame,
                                const ObservationWindow& window,
                                const std::vector<double>& omegas_out,
                                std::size_t n_realizations, std::uint64_t seed,
                                int num_threads) {
  if (n_realizations < 2) throw std::domain_error("mc_periodogram: n_realizations must be >= 2");
  const ModeTransforms tr = compute_mode_transforms(modes, frame, window, omegas_out, num_threads);
  SpectrumEstimate est = make_estimate_shell(modes, frame, window, omegas_out);
  est.seed = seed;
  est.n_realizations = n_realizations;
  est.expected = expected_from_transforms(modes, tr);

  const std::size_t nb = tr.n_bins;
  // per-realization periodograms; each is independent, so the fill order is
  // irrelevant and the fixed-order reduction below is what the caller sees
  std::vector<double> pgram(n_realizations * nb);
  for (std::size_t i = 0; i < n_realizations; ++i) {
    const auto amps = amplitudes_for_realization(seed, i, tr.n_modes);
    for (std::size_t b = 0; b < nb; ++b) {
      std::complex<double> g(0.0, 0.0);
      for (std::size_t n = 0; n < tr.n_modes; ++n)
        g += modes.weights[n] * (amps[n] * tr.a_plus[n * nb + b] +
                                 std::conj(amps[n]) * tr.a_minus[n * nb + b]);
      pgram[i * nb + b] = std::norm(g);
    }
  }

  est.mc_mean.assign(nb, 0.0);
  est.mc_stderr.assign(nb, 0.0);
  for (std::size_t i = 0; i < n_realizations; ++i)
    for (std::size_t b = 0; b < nb; ++b) est.mc_mean[b] += pgram[i * nb + b];
  for (std::size_t b = 0; b < nb; ++b) est.mc_mean[b] /= static_cast<double>(n_realizations);
  for (std::size_t i = 0; i < n_realizations; ++i)
    for (std::size_t b = 0; b < nb; ++b) {
      const double d = pgram[i * nb + b] - est.mc_mean[b];
      est.mc_stderr[b] += d * d;
    }
  for (std::size_t b = 0; b < nb; ++b)
    est.mc_stderr[b] = std::sqrt(est.mc_stderr[b] /
                                 (static_cast<double>(n_realizations) *
                                  static_cast<double>(n_realizations - 1)));
  return est;
}

double theory_spectrum(const AcceleratedFrame& frame, double omega_out) {
  frame.validate();
  if (!(omega_out > 0.0)) throw std::domain_error("theory_spectrum: omega_out must be positive");
  const double x = pi * omega_out * frame.constants.c / frame.a;
  return (frame.constants.hbar * frame.constants.c / (2.0 * omega_out)) / std::tanh(x);
}

std::vector<double> convolved_theory_curve(double accel, double band_lo, double band_hi,
                                           const ObservationWindow& window,
                                           const std::vector<double>& omegas_out,
                                           const PhysicalConstants& constants) {
  if (accel < 0.0) throw std::domain_error("convolved_theory_curve: accel must be >= 0");
  if (!(band_lo > 0.0) || !(band_hi > band_lo))
    throw std::domain_error("convolved_theory_curve: need 0 < band_lo < band_hi");
  window.validate();
  const auto& f = detail::RegularizedCi::instance();
  const double T = window.t_obs;
  const double c = constants.c;
  const double x_range = std::log(band_hi / band_lo);

  // inner grid density: resolve the f-kernel oscillation (active for
  // arguments up to 50) and the window itself
  const double rate = std::max(50.0 * accel / c, two_pi / T);
  auto make_odd = [](std::size_t n) { return (n % 2 == 0) ? n + 1 : n; };
  const std::size_t ntau =
      make_odd(std::max<std::size_t>(801, static_cast<std::size_t>(std::ceil(T * rate / 0.35))));
  const std::size_t ns =
      make_odd(std::max<std::size_t>(2001, static_cast<std::size_t>(std::ceil(T / 0.002)) + 1));

  // C(s) = int_0^{T-s} w(t) w(t+s) G(t, t+s) dt, Simpson in t
  std::vector<double> corr(ns, 0.0);
  const double ds = T / static_cast<double>(ns - 1);
  for (std::size_t k = 0; k + 1 < ns; ++k) {  // C(T) = 0: window vanishes
    const double s = ds * static_cast<double>(k);
    const double span = T - s;
    const double h = span / static_cast<double>(ntau - 1);
    const double chirp_factor = accel > 0.0 ? -std::expm1(-accel * s / c) : 0.0;
    // rotors for w(t) and w(t+s)
    const double dphase = two_pi * h / T;
    const double dwc = std::cos(dphase), dws = std::sin(dphase);
    double c1 = 1.0, s1 = 0.0;
    double c2 = std::cos(two_pi * s / T), s2 = std::sin(two_pi * s / T);
    const double ddecay = accel > 0.0 ? std::exp(-accel * h / c) : 1.0;
    double chirp = 1.0;  // e^{-a t / c}
    double acc = 0.0;
    for (std::size_t j = 0; j < ntau; ++j) {
      if ((j % kRefreshStride) == 0 && j > 0) {
        const double t = h * static_cast<double>(j);
        chirp = std::exp(-accel * t / c);
        c1 = std::cos(two_pi * t / T);
        s1 = std::sin(two_pi * t / T);
        c2 = std::cos(two_pi * (t + s) / T);
        s2 = std::sin(two_pi * (t + s) / T);
      }
      double q;
      if (accel > 0.0) {
        q = (c / accel) * chirp * chirp_factor;
      } else {
        q = s;  // inertial: plain lag
      }
      const double gam = x_range + f(q * band_hi) - f(q * band_lo);
      const double w1 = 0.5 * (1.0 - c1);
      const double w2 = 0.5 * (1.0 - c2);
      const double simpson = (j == 0 || j + 1 == ntau) ? 1.0 : ((j % 2 == 1) ? 4.0 : 2.0);
      acc += simpson * w1 * w2 * gam;
      const double nc1 = c1 * dwc - s1 * dws;
      s1 = c1 * dws + s1 * dwc;
      c1 = nc1;
      const double nc2 = c2 * dwc - s2 * dws;
      s2 = c2 * dws + s2 * dwc;
      c2 = nc2;
      chirp *= ddecay;
    }
    corr[k] = constants.hbar * c * acc * h / 3.0;
  }

  // conv(W) = (2/(2pi)^2) int_0^T cos(W s) C(s) ds, Simpson in s
  std::vector<double> out(omegas_out.size(), 0.0);
  for (std::size_t b = 0; b < omegas_out.size(); ++b) {
    const double om = omegas_out[b];
    double acc = 0.0;
    for (std::size_t k = 0; k < ns; ++k) {
      const double simpson = (k == 0 || k + 1 == ns) ? 1.0 : ((k % 2 == 1) ? 4.0 : 2.0);
      acc += simpson * std::cos(om * ds * static_cast<double>(k)) * corr[k];
    }
    out[b] = 2.0 * acc * ds / 3.0 / (two_pi * two_pi);
  }
  return out;
}

namespace {

double fit_sse(double accel, const SpectrumEstimate& est, const std::vector<double>& data,
               const PhysicalConstants& constants) {
  const std::vector<double> model = convolved_theory_curve(
      accel, est.band_lo, est.band_hi, est.window, est.omegas_out, constants);
  double sse = 0.0;
  for (std::size_t b = 0; b < data.size(); ++b) {
    const double d = model[b] - data[b];
    sse += d * d;
  }
  return sse;
}

}  // namespace

TemperatureFit fit_unruh_temperature(const SpectrumEstimate& estimate,
                                     const AcceleratedFrame& frame_guess) {
  frame_guess.validate();
  const std::vector<double>& data =
      !estimate.expected.empty() ? estimate.expected : estimate.mc_mean;
  if (data.empty())
    throw std::invalid_argument("fit_unruh_temperature: estimate has no spectrum values");
  const double unit = frame_guess.a / frame_guess.constants.c;
  if (estimate.omegas_out.size() < 8 || estimate.omegas_out.front() > 0.5001 * unit ||
      estimate.omegas_out.back() < 2.9999 * unit)
    throw std::invalid_argument(
        "fit_unruh_temperature: estimate must cover [0.5, 3] a/c with >= 8 bins");

  const PhysicalConstants& pc = frame_guess.constants;
  auto sse = [&](double u) { return fit_sse(std::exp(u), estimate, data, pc); };

  // golden-section in log acceleration
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = std::log(frame_guess.a / 6.0);
  double hi = std::log(frame_guess.a * 6.0);
  double x1 = hi - golden * (hi - lo);
  double x2 = lo + golden * (hi - lo);
  double f1 = sse(x1), f2 = sse(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - golden * (hi - lo);
      f1 = sse(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + golden * (hi - lo);
      f2 = sse(x2);
    }
  }
  const double a_hat = std::exp(0.5 * (lo + hi));
  const double sse0 = sse(std::log(a_hat));

  const auto n = static_cast<double>(data.size());
  double mean_abs = 0.0;
  for (double d : data) mean_abs += std::abs(d);
  mean_abs /= n;
  TemperatureFit fit;
  fit.acceleration = a_hat;
  fit.temperature = pc.hbar * a_hat / (2.0 * pi * pc.k_b * pc.c);
  fit.rms_relative = std::sqrt(sse0 / n) / mean_abs;
  if (fit.rms_relative > 0.10)
    throw FitError("fit_unruh_temperature: rms residual " + std::to_string(fit.rms_relative) +
                   " exceeds 10%");

  // curvature-based 1-sigma: sigma^2 = 2 s^2 / (d^2 SSE / dT^2)
  const double dh = 1e-3;
  const double sp = sse(std::log(a_hat * (1.0 + dh)));
  const double sm = sse(std::log(a_hat * (1.0 - dh)));
  const double dT = fit.temperature * dh;
  const double curvature = (sp - 2.0 * sse0 + sm) / (dT * dT);
  const double s2 = sse0 / std::max(1.0, n - 1.0);
  fit.uncertainty = curvature > 0.0 ? std::sqrt(2.0 * s2 / curvature) : 0.0;
  return fit;
}

double UnruhConfig::band_hi() const {
  return omega_out_max * std::exp(t_obs * a / constants.c);
}

std::vector<double> UnruhConfig::output_bins() const {
  if (n_bins < 2) throw std::domain_error("UnruhConfig: need at least 2 output bins");
  std::vector<double> bins(n_bins);
  for (std::size_t b = 0; b < n_bins; ++b)
    bins[b] = omega_out_min + (omega_out_max - omega_out_min) * static_cast<double>(b) /
                                  static_cast<double>(n_bins - 1);
  return bins;
}

}  // namespace zpf::unruh
