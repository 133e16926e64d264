#include <fstream>

#include "doctest.h"
#include "rsfield/amplitudes.hpp"
#include "rsfield/suites.hpp"

using namespace rsfield;

TEST_CASE("report rendering is deterministic and carries the summary") {
  Report report;
  report.config["seed"] = "7";
  report.add(make_check("demo", "alpha", "x = y", 1e-12, 1e-10));
  report.add(make_check("demo", "beta", "u <= v", 2.0, 1.0));
  CHECK(report.total() == 2);
  CHECK(report.passed() == 1);
  CHECK_FALSE(report.all_passed());

  const std::string json = report.to_json();
  CHECK(json == report.to_json());
  CHECK(json.find("\"schema_version\": 1") != std::string::npos);
  CHECK(json.find("\"relation\": \"x = y\"") != std::string::npos);

  const std::string text = report.to_text();
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("1/2 checks passed") != std::string::npos);
}

TEST_CASE("config parsing, overrides and validation") {
  RunConfig config;
  apply_config_entry(config, "N", "16");
  apply_config_entry(config, "sigma1", "0.3");
  apply_config_entry(config, "suite", "tensoralg");
  CHECK(config.N == 16);
  CHECK(config.sigma1 == 0.3);
  config.validate();

  CHECK_THROWS_AS(apply_config_entry(config, "bogus", "1"), ConfigError);
  CHECK_THROWS_AS(apply_config_entry(config, "N", "many"), ConfigError);

  RunConfig bad;
  bad.suite = "nosuch";
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad.suite = "all";
  bad.N = 7;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad.N = 16;
  bad.sigma1 = bad.L;  // far beyond L/10
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("converge rejects non-increasing cutoff ladders") {
  RunConfig config;
  CHECK_THROWS_AS(static_cast<void>(run_converge(config, {4.0, 3.0})), ConfigError);
  CHECK_THROWS_AS(static_cast<void>(run_converge(config, {})), ConfigError);
}

TEST_CASE("maxwell suite accepts a scenario state file") {
  const SpatialGrid grid = build_grid(6.283185307179586, 16);
  const ModeLatticePtr lattice = build_mode_lattice(grid, 4.0);
  ModeAmplitudes state(lattice);
  state.set(*lattice->index_of({1, 0, 0}), 1, Complex(0.8, 0.0));
  state.set(*lattice->index_of({0, 2, 1}), 2, Complex(0.1, -0.5));
  const std::string path = "scenario_state.txt";
  {
    std::ofstream out(path);
    state.save(out);
  }
  RunConfig config;
  config.suite = "maxwell";
  config.N = 16;
  config.state_file = path;
  const Report report = run_verify(config);
  CHECK(report.all_passed());

  config.state_file = "does_not_exist.txt";
  CHECK_THROWS_AS(static_cast<void>(run_verify(config)), ConfigError);
}

TEST_CASE("tensoralg suite runs green through the driver") {
  RunConfig config;
  config.suite = "tensoralg";
  const Report report = run_verify(config);
  CHECK(report.total() > 0);
  CHECK(report.all_passed());
  // identical configs give bit-identical reports
  CHECK(run_verify(config).to_json() == report.to_json());
}
