// zpfield: batch CLI over the zeropoint-field spectral library.
// Exit codes: 0 all checks passed, 1 a residual exceeded its tolerance,
// 2 usage error.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>

#include "CLI11.hpp"
#include "json.hpp"

#include "zpfield/checks.hpp"
#include "zpfield/fluctuations.hpp"
#include "zpfield/gamma_integrals.hpp"
#include "zpfield/invariance.hpp"
#include "zpfield/io.hpp"
#include "zpfield/kinematics.hpp"
#include "zpfield/planck.hpp"
#include "zpfield/spectra.hpp"
#include "zpfield/unruh.hpp"
#include "zpfield/version.hpp"

namespace {

constexpr double pi = std::numbers::pi;

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string unit_system = "natural";
  std::string constants_file;
  std::string out;
  std::string format = "csv";
};

zpf::PhysicalConstants resolve_constants(const GlobalOptions& g) {
  if (g.unit_system == "natural") return zpf::PhysicalConstants::natural();
  // SI runs must pin their constants explicitly
  nlohmann::json j;
  std::ifstream in(g.constants_file);
  if (!in) throw std::runtime_error("cannot read constants file: " + g.constants_file);
  in >> j;
  zpf::PhysicalConstants c{j.at("hbar").get<double>(), j.at("c").get<double>(),
                           j.at("k_b").get<double>()};
  c.validate();
  return c;
}

std::string output_path(const GlobalOptions& g, const std::string& fallback) {
  if (!g.out.empty()) return g.out;
  std::string dir;
  if (const char* env = std::getenv("ZPFIELD_OUT_DIR")) dir = env;
  if (!dir.empty() && dir.back() != '/') dir += "/";
  return dir + fallback;
}

zpf::io::Metadata make_meta(const GlobalOptions& g, const std::string& command) {
  zpf::io::Metadata m;
  m.command = command;
  m.seed = g.seed;
  m.units = g.unit_system;
  m.version = zpf::kVersion;
  return m;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

std::vector<double> logspace(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = lo * std::exp(std::log(hi / lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  return g;
}

int report_outcome(const std::string& command, bool pass, double worst, double tol,
                   const GlobalOptions& g, const std::string& data_path, double wall_seconds) {
  nlohmann::json report;
  report["command"] = command;
  report["seed"] = g.seed;
  report["units"] = g.unit_system;
  report["version"] = zpf::kVersion;
  report["pass"] = pass;
  report["max_residual"] = worst;
  report["tolerance"] = tol;
  report["wall_seconds"] = wall_seconds;
  if (!data_path.empty()) report["output"] = data_path;
  std::cout << report.dump(2) << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zeropoint-field spectra, invariance checks, and the accelerated-observer "
               "thermal spectrum"};
  app.set_config("--config", "", "read options from an INI file (flags win)");
  app.allow_config_extras(CLI::config_extras_mode::error);  // unknown keys rejected
  app.fallthrough();  // global flags may follow the subcommand name
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--seed", g.seed, "RNG seed echoed into all outputs")->capture_default_str();
  app.add_option("--unit-system", g.unit_system, "natural or si")
      ->check(CLI::IsMember({"natural", "si"}))
      ->capture_default_str();
  app.add_option("--constants", g.constants_file,
                 "JSON file with hbar, c, k_b (required for --unit-system si)");
  app.add_option("--out", g.out, "output path (default: <command>.<format> in ZPFIELD_OUT_DIR)");
  app.add_option("--format", g.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // spectra
  auto* cmd_spectra = app.add_subcommand("spectra", "sample an analytic spectral-density curve");
  std::string kind = "planck_zp";
  double sp_temperature = 1.0, sp_lo = 0.1, sp_hi = 10.0;
  std::size_t sp_points = 200;
  cmd_spectra->add_option("--kind", kind, "rayleigh_jeans, zeropoint, or planck_zp")
      ->check(CLI::IsMember({"rayleigh_jeans", "zeropoint", "planck_zp"}))
      ->capture_default_str();
  cmd_spectra->add_option("--temperature", sp_temperature)->capture_default_str();
  cmd_spectra->add_option("--omega-min", sp_lo)->capture_default_str();
  cmd_spectra->add_option("--omega-max", sp_hi)->capture_default_str();
  cmd_spectra->add_option("--points", sp_points)->capture_default_str();

  // ode
  auto* cmd_ode = app.add_subcommand("ode", "integrate the fluctuation ODE and compare with the "
                                            "closed form");
  double ode_omega = 1.0, ode_t0 = 0.1, ode_t1 = 2.0, ode_tol = 1e-6;
  std::size_t ode_steps = 2000;
  cmd_ode->add_option("--omega", ode_omega)->capture_default_str();
  cmd_ode->add_option("--t-start", ode_t0)->capture_default_str();
  cmd_ode->add_option("--t-end", ode_t1)->capture_default_str();
  cmd_ode->add_option("--steps", ode_steps)->capture_default_str();
  cmd_ode->add_option("--tol", ode_tol, "pass threshold on max relative deviation")
      ->capture_default_str();

  // invariance
  auto* cmd_inv = app.add_subcommand("invariance", "Lorentz-invariance residual grid");
  std::size_t inv_n = 20;
  double inv_tol = 1e-12;
  cmd_inv->add_option("--grid", inv_n, "grid points per axis")->capture_default_str();
  cmd_inv->add_option("--tol", inv_tol)->capture_default_str();

  // wien
  auto* cmd_wien = app.add_subcommand("wien", "adiabatic-variation and scaling-form residuals");
  double wien_tol = 1e-8;
  cmd_wien->add_option("--tol", wien_tol)->capture_default_str();

  // kinematics
  auto* cmd_kin = app.add_subcommand("kinematics", "hyperbolic trajectory table");
  double kin_a = 1.0, kin_tau_max = 3.0;
  std::size_t kin_points = 121;
  cmd_kin->add_option("--a", kin_a)->capture_default_str();
  cmd_kin->add_option("--tau-max", kin_tau_max)->capture_default_str();
  cmd_kin->add_option("--points", kin_points)->capture_default_str();

  // fluctuations
  auto* cmd_fluct = app.add_subcommand("fluctuations", "variance decomposition over a grid of "
                                                       "hbar w / k_b T");
  double fl_tol = 1e-6;
  std::size_t fl_points = 20;
  cmd_fluct->add_option("--points", fl_points)->capture_default_str();
  cmd_fluct->add_option("--tol", fl_tol)->capture_default_str();

  // unruh-expected / unruh-mc
  auto add_unruh_options = [](CLI::App* cmd, zpf::unruh::UnruhConfig& cfg) {
    cmd->add_option("--a", cfg.a, "proper acceleration")->capture_default_str();
    cmd->add_option("--t-obs", cfg.t_obs, "window length in proper time")->capture_default_str();
    cmd->add_option("--delta-x", cfg.delta_x, "log-frequency mode spacing")->capture_default_str();
    cmd->add_option("--omega-out-min", cfg.omega_out_min)->capture_default_str();
    cmd->add_option("--omega-out-max", cfg.omega_out_max)->capture_default_str();
    cmd->add_option("--bins", cfg.n_bins)->capture_default_str();
    cmd->add_option("--band-lo-factor", cfg.band_lo_factor)->capture_default_str();
    cmd->add_option("--dtau-cap", cfg.dtau_cap)->capture_default_str();
  };
  zpf::unruh::UnruhConfig ucfg_expected, ucfg_mc;
  auto* cmd_uexp = app.add_subcommand("unruh-expected",
                                      "deterministic expected periodogram of the accelerated "
                                      "zeropoint field");
  add_unruh_options(cmd_uexp, ucfg_expected);
  double uexp_tol = 0.03;
  cmd_uexp->add_option("--tol", uexp_tol, "pass threshold on |E/conv - 1|")->capture_default_str();

  auto* cmd_umc = app.add_subcommand("unruh-mc", "Monte Carlo periodogram ensemble");
  add_unruh_options(cmd_umc, ucfg_mc);
  std::size_t umc_n = 100;
  cmd_umc->add_option("--n", umc_n, "number of realizations")->capture_default_str();

  // gamma-check
  auto* cmd_gamma = app.add_subcommand("gamma-check", "imaginary-argument Gamma identity residuals");
  double gm_lo = 0.05, gm_hi = 10.0, gm_tol = 1e-9;
  std::size_t gm_points = 25;
  cmd_gamma->add_option("--x-min", gm_lo)->capture_default_str();
  cmd_gamma->add_option("--x-max", gm_hi)->capture_default_str();
  cmd_gamma->add_option("--points", gm_points)->capture_default_str();
  cmd_gamma->add_option("--tol", gm_tol)->capture_default_str();

  // all-checks
  auto* cmd_all = app.add_subcommand("all-checks", "run the full verification battery "
                                                   "(several minutes)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto wall_start = std::chrono::steady_clock::now();
  auto wall = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  };

  try {
    if (g.unit_system == "si" && g.constants_file.empty()) {
      std::cerr << "--unit-system si requires --constants <file>\n";
      return 2;
    }
    const zpf::PhysicalConstants constants = resolve_constants(g);

    if (*cmd_spectra) {
      const auto kind_e = zpf::spectra::spectrum_kind_from_string(kind);
      const auto curve = zpf::spectra::sample_curve(kind_e, logspace(sp_lo, sp_hi, sp_points),
                                                    sp_temperature, constants);
      zpf::io::Table t;
      t.names = {"omega", "value"};
      t.columns = {curve.omegas, curve.values};
      t.text_names = {"kind", "temperature"};
      t.text_columns = {std::vector<std::string>(curve.omegas.size(), zpf::spectra::to_string(kind_e)),
                        std::vector<std::string>(curve.omegas.size(),
                                                 zpf::io::format_double(sp_temperature))};
      const std::string path = output_path(g, "spectra." + g.format);
      zpf::io::emit(t, make_meta(g, "spectra"), g.format, path);
      return report_outcome("spectra", true, 0.0, 0.0, g, path, wall());
    }

    if (*cmd_ode) {
      const auto closed = [&](double temp) {
        return zpf::spectra::spectral_density(zpf::spectra::SpectrumKind::planck_zp, ode_omega,
                                              {temp}, constants);
      };
      const auto sol = zpf::fluctuations::solve_spectrum_ode(ode_omega, ode_t0, ode_t1,
                                                             closed(ode_t0), ode_steps, constants);
      std::vector<double> closed_vals(sol.temperatures.size()), rel(sol.temperatures.size());
      double worst = 0.0;
      for (std::size_t i = 0; i < sol.temperatures.size(); ++i) {
        closed_vals[i] = closed(sol.temperatures[i]);
        rel[i] = (sol.densities[i] - closed_vals[i]) / closed_vals[i];
        worst = std::max(worst, std::abs(rel[i]));
      }
      zpf::io::Table t;
      t.names = {"temperature", "rho_numeric", "rho_closed", "rel_err"};
      t.columns = {sol.temperatures, sol.densities, closed_vals, rel};
      const std::string path = output_path(g, "ode." + g.format);
      zpf::io::emit(t, make_meta(g, "ode"), g.format, path);
      return report_outcome("ode", worst <= ode_tol, worst, ode_tol, g, path, wall());
    }

    if (*cmd_inv) {
      zpf::io::Table t;
      std::vector<double> betas, mus, residuals;
      double worst = 0.0;
      zpf::invariance::SpectrumModel linear{[](double w) { return w; }, "alpha w"};
      for (std::size_t i = 0; i < inv_n; ++i) {
        const double beta = -0.9 + 1.8 * static_cast<double>(i) / static_cast<double>(inv_n - 1);
        for (std::size_t j = 0; j < inv_n; ++j) {
          const double mu = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(inv_n - 1);
          const auto w = zpf::invariance::WaveVector4::light_like(1.0, mu, constants);
          const double r =
              zpf::invariance::lorentz_residual(linear, zpf::invariance::Boost(beta), w, constants);
          betas.push_back(beta);
          mus.push_back(mu);
          residuals.push_back(r);
          worst = std::max(worst, std::abs(r));
        }
      }
      t.names = {"beta", "kx_over_k", "residual"};
      t.columns = {betas, mus, residuals};
      const std::string path = output_path(g, "invariance." + g.format);
      zpf::io::emit(t, make_meta(g, "invariance"), g.format, path);
      return report_outcome("invariance", worst <= inv_tol, worst, inv_tol, g, path, wall());
    }

    if (*cmd_wien) {
      const double a_const = constants.hbar / (2.0 * pi * pi * std::pow(constants.c, 3));
      std::vector<double> omegas, adiabatic, scaling;
      double worst = 0.0;
      auto planck_rho = [&](double w, double temp) {
        return zpf::spectra::spectral_density(zpf::spectra::SpectrumKind::planck_zp, w, {temp},
                                              constants);
      };
      for (double w : logspace(0.2, 5.0, 9)) {
        const double delta = zpf::invariance::wien_adiabatic_delta(
            [a_const](double x) { return a_const * x * x * x; }, w, 1.0);
        const double rel = delta / (a_const * w * w * w);
        const double sc = zpf::invariance::wien_scaling_check(planck_rho, w, 1.3, 2.0);
        omegas.push_back(w);
        adiabatic.push_back(rel);
        scaling.push_back(sc);
        worst = std::max({worst, std::abs(rel), std::abs(sc)});
      }
      zpf::io::Table t;
      t.names = {"omega", "adiabatic_residual", "scaling_residual"};
      t.columns = {omegas, adiabatic, scaling};
      const std::string path = output_path(g, "wien." + g.format);
      zpf::io::emit(t, make_meta(g, "wien"), g.format, path);
      return report_outcome("wien", worst <= wien_tol, worst, wien_tol, g, path, wall());
    }

    if (*cmd_kin) {
      const zpf::kinematics::AcceleratedFrame frame{kin_a, constants};
      std::vector<double> taus = linspace(0.0, kin_tau_max, kin_points);
      std::vector<double> ts, xs, vs, chirps;
      for (double tau : taus) {
        const auto p = zpf::kinematics::trajectory_proper(frame, tau);
        ts.push_back(p.t);
        xs.push_back(p.x);
        vs.push_back(p.v);
        chirps.push_back(zpf::kinematics::doppler_chirp(frame, 1.0, tau, true));
      }
      zpf::io::Table t;
      t.names = {"tau", "t", "x", "v", "doppler_co"};
      t.columns = {taus, ts, xs, vs, chirps};
      const std::string path = output_path(g, "kinematics." + g.format);
      zpf::io::emit(t, make_meta(g, "kinematics"), g.format, path);
      return report_outcome("kinematics", true, 0.0, 0.0, g, path, wall());
    }

    if (*cmd_fluct) {
      std::vector<double> xs = logspace(0.1, 10.0, fl_points);
      std::vector<double> total, thermal, zero, fd, rel;
      double worst = 0.0;
      for (double x : xs) {
        const auto dec = zpf::fluctuations::decompose_variance(x, 1.0, constants);
        const double fdv = zpf::fluctuations::thermal_variance(x, 1.0, constants);
        total.push_back(dec.total);
        thermal.push_back(dec.thermal);
        zero.push_back(dec.zeropoint);
        fd.push_back(fdv);
        rel.push_back((dec.thermal - fdv) / fdv);
        worst = std::max(worst, std::abs(rel.back()));
      }
      zpf::io::Table t;
      t.names = {"x", "total", "thermal", "zeropoint", "thermal_fd", "rel_err"};
      t.columns = {xs, total, thermal, zero, fd, rel};
      const std::string path = output_path(g, "fluctuations." + g.format);
      zpf::io::emit(t, make_meta(g, "fluctuations"), g.format, path);
      return report_outcome("fluctuations", worst <= fl_tol, worst, fl_tol, g, path, wall());
    }

    auto emit_estimate = [&](const zpf::unruh::SpectrumEstimate& est, const std::string& command,
                             zpf::io::Metadata meta) {
      zpf::io::Table t;
      t.names = {"omega_out", "expected", "mc_mean", "mc_stderr", "theory_convolved",
                 "theory_raw"};
      const std::vector<double> zeros(est.omegas_out.size(), 0.0);
      t.columns = {est.omegas_out,
                   est.expected,
                   est.mc_mean.empty() ? zeros : est.mc_mean,
                   est.mc_stderr.empty() ? zeros : est.mc_stderr,
                   est.theory_convolved,
                   est.theory_raw};
      const std::string path = output_path(g, command + "." + g.format);
      zpf::io::emit(t, meta, g.format, path);
      return path;
    };

    if (*cmd_uexp) {
      ucfg_expected.constants = constants;
      ucfg_expected.seed = g.seed;
      const auto modes =
          zpf::unruh::build_modeset(ucfg_expected.band_lo(), ucfg_expected.band_hi(),
                                    ucfg_expected.delta_x, g.seed, constants);
      const auto window =
          zpf::unruh::ObservationWindow::hann(ucfg_expected.t_obs, ucfg_expected.dtau_cap);
      const auto est = zpf::unruh::expected_periodogram(modes, ucfg_expected.frame(), window,
                                                        ucfg_expected.output_bins());
      double worst = 0.0;
      for (std::size_t b = 0; b < est.omegas_out.size(); ++b)
        worst = std::max(worst, std::abs(est.expected[b] / est.theory_convolved[b] - 1.0));
      auto meta = make_meta(g, "unruh-expected");
      meta.extra["a"] = zpf::io::format_double(ucfg_expected.a);
      meta.extra["t_obs"] = zpf::io::format_double(ucfg_expected.t_obs);
      const std::string path = emit_estimate(est, "unruh-expected", meta);
      return report_outcome("unruh-expected", worst <= uexp_tol, worst, uexp_tol, g, path, wall());
    }

    if (*cmd_umc) {
      ucfg_mc.constants = constants;
      ucfg_mc.seed = g.seed;
      ucfg_mc.n_realizations = umc_n;
      const auto modes = zpf::unruh::build_modeset(ucfg_mc.band_lo(), ucfg_mc.band_hi(),
                                                   ucfg_mc.delta_x, g.seed, constants);
      const auto window = zpf::unruh::ObservationWindow::hann(ucfg_mc.t_obs, ucfg_mc.dtau_cap);
      const auto est = zpf::unruh::mc_periodogram(modes, ucfg_mc.frame(), window,
                                                  ucfg_mc.output_bins(), umc_n, g.seed);
      double worst = 0.0;
      for (std::size_t b = 0; b < est.omegas_out.size(); ++b)
        worst = std::max(worst,
                         std::abs(est.mc_mean[b] - est.expected[b]) / (4.0 * est.mc_stderr[b]));
      auto meta = make_meta(g, "unruh-mc");
      meta.extra["n_realizations"] = std::to_string(umc_n);
      const std::string path = emit_estimate(est, "unruh-mc", meta);
      return report_outcome("unruh-mc", worst <= 1.0, worst, 1.0, g, path, wall());
    }

    if (*cmd_gamma) {
      std::vector<double> xs = logspace(gm_lo, gm_hi, gm_points), residuals;
      double worst = 0.0;
      for (double x : xs) {
        residuals.push_back(zpf::gammaint::gamma_imag_identity_residual(x));
        worst = std::max(worst, std::abs(residuals.back()));
      }
      zpf::io::Table t;
      t.names = {"x", "residual"};
      t.columns = {xs, residuals};
      const std::string path = output_path(g, "gamma-check." + g.format);
      zpf::io::emit(t, make_meta(g, "gamma-check"), g.format, path);
      return report_outcome("gamma-check", worst <= gm_tol, worst, gm_tol, g, path, wall());
    }

    if (*cmd_all) {
      const auto results = zpf::checks::run_acceptance_checks();
      std::cout << zpf::checks::format_report(results);
      nlohmann::json report;
      report["command"] = "all-checks";
      report["seed"] = g.seed;
      report["units"] = g.unit_system;
      report["version"] = zpf::kVersion;
      report["wall_seconds"] = wall();
      for (const auto& r : results)
        report["checks"].push_back({{"id", r.id},
                                    {"name", r.name},
                                    {"pass", r.pass},
                                    {"residual", r.residual},
                                    {"seconds", r.seconds}});
      const std::string path = output_path(g, "all-checks.json");
      zpf::io::write_file_atomic(path, report.dump(2) + "\n");
      return zpf::checks::all_passed(results) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand selected\n";
  return 2;
}
