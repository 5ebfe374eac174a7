#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zpfield/checks.hpp"
#include "zpfield/fluctuations.hpp"
#include "zpfield/gamma_integrals.hpp"
#include "zpfield/invariance.hpp"
#include "zpfield/kinematics.hpp"
#include "zpfield/planck.hpp"
#include "zpfield/spectra.hpp"
#include "zpfield/unruh.hpp"
#include "zpfield/version.hpp"

namespace py = pybind11;
using namespace zpf;

PYBIND11_MODULE(zpfield, m) {
  m.doc() = "zeropoint-field spectra, invariance checks, and the accelerated-observer "
            "thermal spectrum";
  m.attr("__version__") = kVersion;

  py::class_<PhysicalConstants>(m, "PhysicalConstants")
      .def(py::init<>())
      .def(py::init<double, double, double>(), py::arg("hbar"), py::arg("c"), py::arg("k_b"))
      .def_readwrite("hbar", &PhysicalConstants::hbar)
      .def_readwrite("c", &PhysicalConstants::c)
      .def_readwrite("k_b", &PhysicalConstants::k_b)
      .def_static("natural", &PhysicalConstants::natural)
      .def_static("si", &PhysicalConstants::si);

  // planck
  m.def("entropy_of_mean_energy", &planck::entropy_of_mean_energy, py::arg("mean_energy"),
        py::arg("epsilon"), py::arg("constants") = PhysicalConstants::natural());
  m.def("mean_energy_planck", &planck::mean_energy_planck, py::arg("epsilon"),
        py::arg("temperature"), py::arg("constants") = PhysicalConstants::natural());
  m.def("mean_energy_with_zeropoint", &planck::mean_energy_with_zeropoint, py::arg("omega"),
        py::arg("temperature"), py::arg("constants") = PhysicalConstants::natural());
  m.def("high_temperature_deficit", &planck::high_temperature_deficit, py::arg("omega"),
        py::arg("temperature"), py::arg("constants") = PhysicalConstants::natural());

  // spectra
  py::enum_<spectra::SpectrumKind>(m, "SpectrumKind")
      .value("rayleigh_jeans", spectra::SpectrumKind::rayleigh_jeans)
      .value("zeropoint", spectra::SpectrumKind::zeropoint)
      .value("planck_zp", spectra::SpectrumKind::planck_zp)
      .value("estimated", spectra::SpectrumKind::estimated);
  m.def("density_of_modes", &spectra::density_of_modes, py::arg("omega"),
        py::arg("constants") = PhysicalConstants::natural());
  m.def(
      "spectral_density",
      [](spectra::SpectrumKind kind, double omega, double temperature,
         const PhysicalConstants& constants) {
        return spectra::spectral_density(kind, omega, {temperature}, constants);
      },
      py::arg("kind"), py::arg("omega"), py::arg("temperature"),
      py::arg("constants") = PhysicalConstants::natural());
  m.def("power_spectrum_from_density", &spectra::power_spectrum_from_density, py::arg("rho"));
  m.def("cumulative_vacuum_energy", &spectra::cumulative_vacuum_energy, py::arg("omega_cutoff"),
        py::arg("constants") = PhysicalConstants::natural());

  // invariance
  py::class_<invariance::Boost>(m, "Boost")
      .def(py::init<double>(), py::arg("beta"))
      .def_readonly("beta", &invariance::Boost::beta)
      .def_readonly("gamma", &invariance::Boost::gamma);
  py::class_<invariance::WaveVector4>(m, "WaveVector4")
      .def_static("light_like", &invariance::WaveVector4::light_like, py::arg("omega"),
                  py::arg("mu"), py::arg("constants") = PhysicalConstants::natural())
      .def_readonly("omega", &invariance::WaveVector4::omega)
      .def_readonly("kx", &invariance::WaveVector4::kx)
      .def_readonly("ky", &invariance::WaveVector4::ky)
      .def_readonly("kz", &invariance::WaveVector4::kz);
  m.def(
      "boost_wavevector",
      [](const invariance::WaveVector4& w, double beta, const PhysicalConstants& constants) {
        return invariance::boost_wavevector(w, invariance::Boost(beta), constants);
      },
      py::arg("wavevector"), py::arg("beta"),
      py::arg("constants") = PhysicalConstants::natural());
  m.def(
      "lorentz_residual",
      [](const std::function<double(double)>& f, double beta, const invariance::WaveVector4& w,
         const PhysicalConstants& constants) {
        return invariance::lorentz_residual({f, "py"}, invariance::Boost(beta), w, constants);
      },
      py::arg("f"), py::arg("beta"), py::arg("wavevector"),
      py::arg("constants") = PhysicalConstants::natural());
  m.def("wien_adiabatic_delta", &invariance::wien_adiabatic_delta, py::arg("rho"),
        py::arg("omega"), py::arg("dV_over_V"), py::arg("fd_step") = 1e-5);
  m.def("wien_scaling_check", &invariance::wien_scaling_check, py::arg("rho"), py::arg("omega"),
        py::arg("temperature"), py::arg("lambda_"));

  // fluctuations
  m.def(
      "maxent_density",
      [](double mean_energy, double energy) {
        return fluctuations::maxent_density({mean_energy}, energy);
      },
      py::arg("mean_energy"), py::arg("energy"));
  m.def(
      "sample_energies",
      [](double mean_energy, std::size_t n, std::uint64_t seed) {
        return fluctuations::sample_energies({mean_energy}, n, seed);
      },
      py::arg("mean_energy"), py::arg("n"), py::arg("seed"));
  m.def(
      "second_moment",
      [](double mean_energy) { return fluctuations::second_moment({mean_energy}); },
      py::arg("mean_energy"));
  m.def("thermal_variance", &fluctuations::thermal_variance, py::arg("omega"),
        py::arg("temperature"), py::arg("constants") = PhysicalConstants::natural(),
        py::arg("fd_step") = 1e-5);
  py::class_<fluctuations::VarianceDecomposition>(m, "VarianceDecomposition")
      .def_readonly("total", &fluctuations::VarianceDecomposition::total)
      .def_readonly("thermal", &fluctuations::VarianceDecomposition::thermal)
      .def_readonly("zeropoint", &fluctuations::VarianceDecomposition::zeropoint);
  m.def("decompose_variance", &fluctuations::decompose_variance, py::arg("omega"),
        py::arg("temperature"), py::arg("constants") = PhysicalConstants::natural());
  m.def("spectrum_ode_rhs", &fluctuations::spectrum_ode_rhs, py::arg("rho"), py::arg("omega"),
        py::arg("temperature"), py::arg("constants") = PhysicalConstants::natural());
  py::class_<fluctuations::OdeSolution>(m, "OdeSolution")
      .def_readonly("temperatures", &fluctuations::OdeSolution::temperatures)
      .def_readonly("densities", &fluctuations::OdeSolution::densities);
  m.def("solve_spectrum_ode", &fluctuations::solve_spectrum_ode, py::arg("omega"),
        py::arg("t_start"), py::arg("t_end"), py::arg("rho_start"), py::arg("steps"),
        py::arg("constants") = PhysicalConstants::natural(),
        py::arg("local_error_tol") = 1e-4);

  // kinematics
  py::class_<kinematics::AcceleratedFrame>(m, "AcceleratedFrame")
      .def(py::init([](double a, const PhysicalConstants& constants) {
             kinematics::AcceleratedFrame f{a, constants};
             f.validate();
             return f;
           }),
           py::arg("a"), py::arg("constants") = PhysicalConstants::natural())
      .def_readonly("a", &kinematics::AcceleratedFrame::a)
      .def("unruh_temperature", &kinematics::AcceleratedFrame::unruh_temperature)
      .def("chirp_rate", &kinematics::AcceleratedFrame::chirp_rate);
  py::class_<kinematics::TrajectoryPoint>(m, "TrajectoryPoint")
      .def_readonly("tau", &kinematics::TrajectoryPoint::tau)
      .def_readonly("t", &kinematics::TrajectoryPoint::t)
      .def_readonly("x", &kinematics::TrajectoryPoint::x)
      .def_readonly("v", &kinematics::TrajectoryPoint::v);
  m.def("trajectory_coordinate", &kinematics::trajectory_coordinate, py::arg("frame"),
        py::arg("t"));
  m.def("trajectory_proper", &kinematics::trajectory_proper, py::arg("frame"), py::arg("tau"));
  m.def(
      "boost_four_acceleration",
      [](const kinematics::AcceleratedFrame& frame, double beta) {
        const auto v = kinematics::boost_four_acceleration(frame, beta);
        return py::make_tuple(v.t, v.x, v.y, v.z);
      },
      py::arg("frame"), py::arg("beta"));
  m.def("doppler_chirp", &kinematics::doppler_chirp, py::arg("frame"), py::arg("omega"),
        py::arg("tau"), py::arg("copropagating"));
  m.def("chirp_phase", &kinematics::chirp_phase, py::arg("frame"), py::arg("omega"),
        py::arg("tau"));

  // gamma integrals
  m.def(
      "complex_gamma", [](std::complex<double> z) { return gammaint::complex_gamma(z); },
      py::arg("z"));
  m.def("gamma_imag_identity_residual", &gammaint::gamma_imag_identity_residual, py::arg("x"));
  m.def(
      "regularized_oscillatory_integral",
      [](std::complex<double> p, double damping_eps, int levels) {
        return gammaint::regularized_oscillatory_integral({p}, damping_eps, levels);
      },
      py::arg("p"), py::arg("damping_eps") = 0.25, py::arg("richardson_levels") = 7);
  m.def(
      "oscillatory_integral_closed_form",
      [](std::complex<double> p) { return gammaint::oscillatory_integral_closed_form(p); },
      py::arg("p"));
  py::class_<gammaint::ContourLegs>(m, "ContourLegs")
      .def_readonly("a", &gammaint::ContourLegs::a)
      .def_readonly("epsilon", &gammaint::ContourLegs::epsilon)
      .def_property_readonly("legs",
                             [](const gammaint::ContourLegs& l) {
                               return std::vector<std::complex<double>>(l.legs.begin(),
                                                                        l.legs.end());
                             })
      .def("alternating_sum", &gammaint::ContourLegs::alternating_sum);
  m.def(
      "contour_decomposition",
      [](std::complex<double> p, double a, double epsilon) {
        return gammaint::contour_decomposition({p}, a, epsilon);
      },
      py::arg("p"), py::arg("a"), py::arg("epsilon"));

  // unruh
  py::class_<unruh::ModeSet>(m, "ModeSet")
      .def_readonly("omegas", &unruh::ModeSet::omegas)
      .def_readonly("weights", &unruh::ModeSet::weights)
      .def_readonly("amplitudes", &unruh::ModeSet::amplitudes)
      .def_readonly("seed", &unruh::ModeSet::seed)
      .def_readonly("delta_x", &unruh::ModeSet::delta_x);
  m.def("build_modeset", &unruh::build_modeset, py::arg("omega_min"), py::arg("omega_max"),
        py::arg("delta_x"), py::arg("seed"),
        py::arg("constants") = PhysicalConstants::natural());
  m.def("eval_field_inertial", &unruh::eval_field_inertial, py::arg("modes"), py::arg("t"));
  m.def("eval_field_accelerated", &unruh::eval_field_accelerated, py::arg("modes"),
        py::arg("frame"), py::arg("tau"));
  py::class_<unruh::ObservationWindow>(m, "ObservationWindow")
      .def_static("hann", &unruh::ObservationWindow::hann, py::arg("t_obs"),
                  py::arg("dtau_cap") = 0.02)
      .def_readonly("t_obs", &unruh::ObservationWindow::t_obs)
      .def_readonly("window_energy", &unruh::ObservationWindow::window_energy)
      .def_readonly("normalization", &unruh::ObservationWindow::normalization)
      .def("value", &unruh::ObservationWindow::value);
  py::class_<unruh::SpectrumEstimate>(m, "SpectrumEstimate")
      .def_readonly("omegas_out", &unruh::SpectrumEstimate::omegas_out)
      .def_readonly("expected", &unruh::SpectrumEstimate::expected)
      .def_readonly("mc_mean", &unruh::SpectrumEstimate::mc_mean)
      .def_readonly("mc_stderr", &unruh::SpectrumEstimate::mc_stderr)
      .def_readonly("theory_convolved", &unruh::SpectrumEstimate::theory_convolved)
      .def_readonly("theory_raw", &unruh::SpectrumEstimate::theory_raw)
      .def_readonly("n_realizations", &unruh::SpectrumEstimate::n_realizations);
  m.def("expected_periodogram", &unruh::expected_periodogram, py::arg("modes"), py::arg("frame"),
        py::arg("window"), py::arg("omegas_out"), py::arg("num_threads") = 0);
  m.def("mc_periodogram", &unruh::mc_periodogram, py::arg("modes"), py::arg("frame"),
        py::arg("window"), py::arg("omegas_out"), py::arg("n_realizations"), py::arg("seed"),
        py::arg("num_threads") = 0);
  m.def("theory_spectrum", &unruh::theory_spectrum, py::arg("frame"), py::arg("omega_out"));
  m.def("convolved_theory_curve", &unruh::convolved_theory_curve, py::arg("accel"),
        py::arg("band_lo"), py::arg("band_hi"), py::arg("window"), py::arg("omegas_out"),
        py::arg("constants") = PhysicalConstants::natural());
  py::class_<unruh::TemperatureFit>(m, "TemperatureFit")
      .def_readonly("temperature", &unruh::TemperatureFit::temperature)
      .def_readonly("uncertainty", &unruh::TemperatureFit::uncertainty)
      .def_readonly("acceleration", &unruh::TemperatureFit::acceleration)
      .def_readonly("rms_relative", &unruh::TemperatureFit::rms_relative);
  m.def("fit_unruh_temperature", &unruh::fit_unruh_temperature, py::arg("estimate"),
        py::arg("frame_guess"));

  // checks
  py::class_<checks::CheckResult>(m, "CheckResult")
      .def_readonly("id", &checks::CheckResult::id)
      .def_readonly("name", &checks::CheckResult::name)
      .def_readonly("pass_", &checks::CheckResult::pass)
      .def_readonly("residual", &checks::CheckResult::residual)
      .def_readonly("detail", &checks::CheckResult::detail);
  m.def("run_acceptance_checks", &checks::run_acceptance_checks,
        "run the full verification battery (several minutes)");
}
