#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zpfield/io.hpp"

using namespace zpf;

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}

TEST_CASE("doubles are written with 16 significant digits") {
  CHECK(io::format_double(1.0) == "1.0000000000000000e+00");
  CHECK(io::format_double(0.1).substr(0, 5) == "1.000");
  // round-trips exactly
  const double v = 0.1234567890123456789;
  CHECK(std::stod(io::format_double(v)) == v);
}

TEST_CASE("csv emission carries metadata and columns") {
  io::Table t;
  t.names = {"omega", "value"};
  t.columns = {{1.0, 2.0}, {0.5, 0.25}};
  io::Metadata m;
  m.command = "spectra";
  m.seed = 7;
  m.units = "natural";
  m.version = "0.1.0";
  const std::string csv = io::to_csv(t, m);
  CHECK(csv.find("# command=spectra seed=7 units=natural version=0.1.0") == 0);
  CHECK(csv.find("omega,value\n") != std::string::npos);
  CHECK(csv.find("1.0000000000000000e+00,5.0000000000000000e-01") != std::string::npos);
}

TEST_CASE("json emission mirrors the csv fields") {
  io::Table t;
  t.names = {"x"};
  t.columns = {{3.0}};
  io::Metadata m;
  m.command = "gamma-check";
  m.seed = 0;
  m.version = "0.1.0";
  const auto j = nlohmann::json::parse(io::to_json(t, m));
  CHECK(j["meta"]["command"] == "gamma-check");
  CHECK(j["columns"]["x"][0] == 3.0);
}

TEST_CASE("ragged tables are rejected") {
  io::Table t;
  t.names = {"a", "b"};
  t.columns = {{1.0}, {1.0, 2.0}};
  CHECK_THROWS_AS(io::to_csv(t, {}), std::invalid_argument);
}

TEST_CASE("atomic write leaves no partial file behind") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "zpfield_io_test";
  fs::create_directories(dir);
  const auto path = (dir / "out.csv").string();
  io::write_file_atomic(path, "hello\n");
  CHECK(slurp(path) == "hello\n");
  CHECK(!fs::exists(path + ".tmp"));
  // unwritable target errors out without touching the destination
  CHECK_THROWS(io::write_file_atomic((dir / "nodir" / "x.csv").string(), "y"));
  fs::remove_all(dir);
}

TEST_CASE("CLI11 config round trip") {
  // flags override file values override defaults, and the emitted config
  // re-parses to the same state
  auto build_app = [](std::uint64_t& seed, std::string& units, double& tol) {
    auto app = std::make_unique<CLI::App>("test");
    app->set_config("--config");
    app->allow_config_extras(CLI::config_extras_mode::error);
    app->add_option("--seed", seed)->capture_default_str();
    app->add_option("--unit-system", units)->capture_default_str();
    app->add_option("--tol", tol)->capture_default_str();
    return app;
  };

  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "zpfield_cfg_test";
  fs::create_directories(dir);
  const auto cfg_path = (dir / "run.ini").string();
  {
    std::ofstream cfg(cfg_path);
    cfg << "seed=11\ntol=0.5\n";
  }

  std::uint64_t seed = 0;
  std::string units = "natural";
  double tol = 1e-6;
  auto app = build_app(seed, units, tol);
  app->parse(std::string("--config ") + cfg_path + " --tol 0.25");
  CHECK(seed == 11);       // from file
  CHECK(tol == 0.25);      // flag wins
  CHECK(units == "natural");

  const std::string emitted = app->config_to_str(true, false);
  std::uint64_t seed2 = 0;
  std::string units2 = "natural";
  double tol2 = 1e-6;
  auto app2 = build_app(seed2, units2, tol2);
  std::stringstream ss(emitted);
  app2->parse_from_stream(ss);
  CHECK(seed2 == seed);
  CHECK(units2 == units);
  CHECK(tol2 == tol);

  // unknown keys in the config are rejected
  {
    std::ofstream cfg(cfg_path);
    cfg << "bogus_key=1\n";
  }
  std::uint64_t seed3 = 0;
  std::string units3 = "natural";
  double tol3 = 1e-6;
  auto app3 = build_app(seed3, units3, tol3);
  CHECK_THROWS_AS(app3->parse(std::string("--config ") + cfg_path), CLI::ParseError);
  fs::remove_all(dir);
}
