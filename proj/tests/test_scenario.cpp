#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "dsap/scenario.hpp"

using namespace dsap;

TEST_CASE("spin magnitude parsing") {
  CHECK(parse_spin("1/2") == 1);
  CHECK(parse_spin("0.5") == 1);
  CHECK(parse_spin("1") == 2);
  CHECK(parse_spin("3/2") == 3);
  CHECK(parse_spin("1.5") == 3);
  CHECK(parse_spin("2") == 4);
  CHECK_THROWS_AS(parse_spin("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spin("2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spin("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_spin("0.3"), std::invalid_argument);
}

TEST_CASE("presets resolve to tabulated rows") {
  const ScenarioConfig a = preset_scenario("fig2a");
  CHECK(a.twice_s == 1);
  CHECK(a.leaves == 2);
  CHECK(a.left_twice_m == 1);
  CHECK(a.preset == "2a");

  const ScenarioConfig b = preset_scenario("table-2a");
  CHECK(b.twice_s == a.twice_s);
  CHECK(b.left_twice_m == a.left_twice_m);

  const ScenarioConfig d = preset_scenario("fig3d");
  CHECK(d.twice_s == 2);
  CHECK(d.left_twice_m == 2);
  CHECK(d.excitations() == 2);

  const ScenarioConfig h = preset_scenario("table-32b");
  CHECK(h.twice_s == 3);
  CHECK(h.leaves == 3);
  CHECK(h.left_twice_m == -1);

  CHECK_THROWS_AS(preset_scenario("fig9z"), std::invalid_argument);
  // the spin-3/2 single-excitation rows have no figure panel
  CHECK_THROWS_AS(preset_scenario("fig32a"), std::invalid_argument);
}

TEST_CASE("flags and presets define the same experiment") {
  const ScenarioConfig preset = preset_scenario("fig3d");
  ScenarioConfig manual;
  manual.twice_s = parse_spin("1");
  manual.leaves = 2;
  manual.left_twice_m = 2;
  manual.tmax_product = 1000.0;
  CHECK(manual.twice_s == preset.twice_s);
  CHECK(manual.leaves == preset.leaves);
  CHECK(manual.left_twice_m == preset.left_twice_m);
  CHECK(manual.t_max() == preset.t_max());
}

TEST_CASE("config text parsing") {
  const ScenarioConfig sc = parse_config_text(
      "# comment\n"
      "spin = 3/2\n"
      "leaves = 3\n"
      "left_projection = 1\n"
      "alpha = 0.02\n"
      "tmax_product = 250\n"
      "samples = 101\n"
      "out = /tmp/traj.csv\n");
  CHECK(sc.twice_s == 3);
  CHECK(sc.leaves == 3);
  CHECK(sc.left_twice_m == 1);
  CHECK(sc.alpha == doctest::Approx(0.02));
  CHECK(sc.tmax_product == doctest::Approx(250.0));
  CHECK(sc.samples == 101);
  CHECK(sc.out_csv == "/tmp/traj.csv");

  CHECK_THROWS_AS(parse_config_text("unknown_key = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("spin 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("spin = fast\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_file("/nonexistent/path.cfg"), std::invalid_argument);
}

TEST_CASE("sweep needs at least two points") {
  const ScenarioConfig base = preset_scenario("fig2a");
  CHECK_THROWS_AS(run_sweep(base, {1000.0}), std::invalid_argument);
}

TEST_CASE("runs are deterministic and the CSV layout is stable") {
  ScenarioConfig scenario = preset_scenario("fig2a");
  scenario.samples = 21;

  const NetworkConfig config = scenario.network();
  const StateVector initial = initial_state(config, scenario.left_twice_m);
  const Trajectory t1 = evolve(config, initial, scenario.samples);
  const DarkStateTrack k1 = track_dark_state(config, initial, scenario.samples);
  const Trajectory t2 = evolve(config, initial, scenario.samples);
  const DarkStateTrack k2 = track_dark_state(config, initial, scenario.samples);

  const std::string csv1 = trajectory_csv(config, t1, k1);
  const std::string csv2 = trajectory_csv(config, t2, k2);
  CHECK(csv1 == csv2);

  // header carries the diagnostics then one column per basis state
  CHECK(csv1.rfind("t,t_over_tmax,min_gap,adiabaticity_ratio,norm,", 0) == 0);
  CHECK(csv1.find("\"1,-1,-1,-1\"") != std::string::npos);
  CHECK(csv1.find("jz_R2") != std::string::npos);

  const size_t header_end = csv1.find('\n');
  size_t lines = 0;
  for (char c : csv1)
    if (c == '\n') ++lines;
  CHECK(lines == 22);  // header + one row per sample
  // count fields on a data row (the header quotes labels that contain commas)
  const size_t row_end = csv1.find('\n', header_end + 1);
  const std::string row = csv1.substr(header_end + 1, row_end - header_end - 1);
  const size_t columns = std::count(row.begin(), row.end(), ',') + 1;
  CHECK(columns == 5 + 4 + 4);  // diagnostics + block dimension + site projections

  const RunSummary summary = summarize_run(scenario, t1, k1);
  CHECK(summary.row_label == "2a");
  CHECK(summary.fidelity > 0.99);
  CHECK(summary.passed());
  const std::string text = summary_text(summary);
  CHECK(text.find("fidelity vs tabulated row 2a") != std::string::npos);
  CHECK(text.find("status: pass") != std::string::npos);
}

TEST_CASE("summary flags an unconverged transport") {
  ScenarioConfig scenario = preset_scenario("fig2a");
  scenario.samples = 11;
  scenario.tmax_product = 10.0;  // far from adiabatic
  const RunSummary summary = run_scenario(scenario);
  CHECK(summary.fidelity < 0.99);
  CHECK_FALSE(summary.passed());
}
