import math

import pytest

import zpfield as zpf


def test_version():
    assert zpf.__version__


def test_planck_values():
    assert zpf.mean_energy_with_zeropoint(1.0, 0.0) == 0.5
    assert zpf.mean_energy_with_zeropoint(1.0, 1.0) == pytest.approx(1.0819767068693264, rel=1e-13)
    assert zpf.mean_energy_planck(1.0, 1.0) == pytest.approx(1.0 / (math.e - 1.0), rel=1e-13)
    with pytest.raises(ValueError):
        zpf.mean_energy_planck(1.0, 0.0)


def test_spectral_density_families():
    zp = zpf.spectral_density(zpf.SpectrumKind.zeropoint, 1.0, 0.0)
    assert zp == pytest.approx(1.0 / (2.0 * math.pi**2), rel=1e-13)
    pzp = zpf.spectral_density(zpf.SpectrumKind.planck_zp, 1.0, 1.0)
    assert pzp == pytest.approx(zp / math.tanh(0.5), rel=1e-13)
    assert zpf.power_spectrum_from_density(pzp) == pytest.approx(2.0 * math.pi / 3.0 * pzp)


def test_lorentz_residual():
    w = zpf.WaveVector4.light_like(1.0, 1.0)
    assert abs(zpf.lorentz_residual(lambda x: 0.37 * x, 0.6, w)) < 1e-12
    assert zpf.lorentz_residual(lambda x: x * x, 0.6, w) == pytest.approx(-0.25, rel=1e-12)


def test_ode_matches_closed_form():
    rho0 = zpf.spectral_density(zpf.SpectrumKind.planck_zp, 1.0, 0.1)
    sol = zpf.solve_spectrum_ode(1.0, 0.1, 2.0, rho0, 2000)
    worst = max(
        abs(rho / zpf.spectral_density(zpf.SpectrumKind.planck_zp, 1.0, t) - 1.0)
        for t, rho in zip(sol.temperatures, sol.densities)
    )
    assert worst < 1e-6


def test_kinematics():
    frame = zpf.AcceleratedFrame(1.0)
    p = zpf.trajectory_proper(frame, 1.0)
    assert p.v == pytest.approx(math.tanh(1.0), rel=1e-14)
    assert frame.unruh_temperature() == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-14)
    assert zpf.doppler_chirp(frame, 2.0, math.log(2.0), True) == pytest.approx(1.0)


def test_gamma_suite():
    assert abs(zpf.gamma_imag_identity_residual(1.0)) < 1e-10
    v = zpf.regularized_oscillatory_integral(0.5 + 0.0j)
    closed = zpf.oscillatory_integral_closed_form(0.5 + 0.0j)
    assert abs(v - closed) < 1e-7
    legs = zpf.contour_decomposition(0.5 + 0.0j, 20.0, 1e-4)
    assert abs(legs.alternating_sum()) < 1e-8


def test_sampling_determinism():
    a = zpf.sample_energies(1.0, 1000, 3)
    b = zpf.sample_energies(1.0, 1000, 3)
    assert a == b
    mean = sum(a) / len(a)
    assert abs(mean - 1.0) < 4.0 / math.sqrt(len(a))


def test_unruh_small_pipeline():
    modes = zpf.build_modeset(0.025, 3.0 * math.exp(4.0), 0.25, 0)
    frame = zpf.AcceleratedFrame(1.0)
    window = zpf.ObservationWindow.hann(4.0, 0.02)
    bins = [0.5 + 0.25 * i for i in range(11)]
    est = zpf.mc_periodogram(modes, frame, window, bins, 16, 0)
    assert len(est.expected) == len(bins)
    assert all(v > 0 for v in est.expected)
    # same seed, same numbers
    again = zpf.mc_periodogram(modes, frame, window, bins, 16, 0)
    assert est.mc_mean == again.mc_mean
    # theory columns present and positive
    assert all(v > 0 for v in est.theory_convolved)
    assert est.theory_raw[0] == pytest.approx(zpf.theory_spectrum(frame, bins[0]), rel=1e-13)
