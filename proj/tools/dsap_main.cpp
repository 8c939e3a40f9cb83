// Command-line front end: scenario runs, adiabaticity sweeps and the full
// tabulated-scenario reproduction, with CSV and plain-text reports.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsap/oracle.hpp"
#include "dsap/scenario.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitScenarioFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string preset;
  std::string config_file;
  std::string spin;
  int leaves = 0;
  int left_projection = 0;
  bool has_left = false;
  double tmax_product = 0.0;
  int samples = 0;
  std::string out;
  std::string report;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--preset", opts.preset, "preset id (fig2a, table-3d, ...)");
  cmd->add_option("--config", opts.config_file, "key=value scenario file");
  cmd->add_option("--spin", opts.spin, "spin magnitude (1/2, 1, 3/2, ...)");
  cmd->add_option("--leaves", opts.leaves, "number of leaf spins");
  cmd->add_option("--left-projection", opts.left_projection,
                  "initial projection of L as 2m")
      ->each([&](const std::string&) { opts.has_left = true; });
  cmd->add_option("--tmax-product", opts.tmax_product,
                  "adiabaticity budget omega_max * t_max");
  cmd->add_option("--samples", opts.samples, "trajectory sample count");
  cmd->add_option("--out", opts.out, "output CSV path");
  cmd->add_option("--report", opts.report, "summary/report path (default stdout)");
}

dsap::ScenarioConfig build_scenario(const CommonOptions& opts) {
  dsap::ScenarioConfig scenario;
  if (!opts.preset.empty() && !opts.config_file.empty()) {
    throw std::invalid_argument("--preset and --config are mutually exclusive");
  }
  if (!opts.preset.empty()) scenario = dsap::preset_scenario(opts.preset);
  if (!opts.config_file.empty()) scenario = dsap::parse_config_file(opts.config_file);
  if (!opts.spin.empty()) scenario.twice_s = dsap::parse_spin(opts.spin);
  if (opts.leaves > 0) scenario.leaves = opts.leaves;
  if (opts.has_left) scenario.left_twice_m = opts.left_projection;
  if (opts.tmax_product > 0.0) scenario.tmax_product = opts.tmax_product;
  if (opts.samples > 0) scenario.samples = opts.samples;
  if (!opts.out.empty()) scenario.out_csv = opts.out;
  if (!opts.report.empty()) scenario.out_report = opts.report;
  scenario.network();  // validate early
  return scenario;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write to '" + path + "'");
  out << content;
  if (!out) throw std::invalid_argument("write failed for '" + path + "'");
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    write_file(path, content);
  }
}

int do_run(const CommonOptions& opts, bool with_oracle, const std::string& dump_h) {
  const dsap::ScenarioConfig scenario = build_scenario(opts);
  const dsap::NetworkConfig network = scenario.network();
  const dsap::StateVector initial = dsap::initial_state(network, scenario.left_twice_m);
  if (!dump_h.empty()) {
    write_file(dump_h, dsap::hamiltonian_dump_csv(network, initial.block->excitations(),
                                                  network.t_max / 2.0));
  }

  const dsap::Trajectory traj = dsap::evolve(network, initial, scenario.samples);
  const dsap::DarkStateTrack track =
      dsap::track_dark_state(network, initial, scenario.samples);
  if (!scenario.out_csv.empty()) {
    write_file(scenario.out_csv, dsap::trajectory_csv(network, traj, track));
  }

  const dsap::RunSummary summary = dsap::summarize_run(scenario, traj, track);
  std::string text = dsap::summary_text(summary);

  bool oracle_ok = true;
  if (with_oracle) {
    std::vector<dsap::OracleReport> reports;
    reports.push_back(dsap::check_counts(network));
    reports.push_back(dsap::check_block_vs_full(network, scenario.left_twice_m));
    reports.push_back(dsap::check_naive_partial_trace(traj.final_state, {2}));
    for (const auto& report : reports) {
      text += report.str();
      oracle_ok = oracle_ok && report.all_passed();
    }
  }
  emit(scenario.out_report, text);
  return summary.passed() && oracle_ok ? kExitPass : kExitScenarioFailure;
}

int do_sweep(const CommonOptions& opts, const std::vector<double>& products) {
  const dsap::ScenarioConfig scenario = build_scenario(opts);
  const auto points = dsap::run_sweep(scenario, products);
  emit(scenario.out_csv, dsap::sweep_csv(points));
  return kExitPass;
}

int do_table(const CommonOptions& opts) {
  double product = opts.tmax_product > 0.0 ? opts.tmax_product : 1000.0;
  int samples = opts.samples > 0 ? opts.samples : 501;
  const auto rows = dsap::run_table(product, samples);
  std::string text = dsap::table_report(rows);
  emit(opts.report.empty() ? opts.out : opts.report, text);
  for (const auto& row : rows) {
    if (!row.passed) return kExitScenarioFailure;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dark-state adiabatic passage on branched spin networks"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  bool with_oracle = false;
  std::string dump_h;
  CLI::App* run_cmd = app.add_subcommand("run", "evolve one scenario and report");
  add_common(run_cmd, run_opts);
  run_cmd->add_flag("--oracle", with_oracle, "also run the brute-force oracle checks");
  run_cmd->add_option("--dump-h", dump_h,
                      "write the mid-schedule block Hamiltonian as row,col,re,im CSV");

  CommonOptions sweep_opts;
  std::vector<double> products;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "scan the adiabaticity budget and report infidelity");
  add_common(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--sweep", products, "tmax products to scan")
      ->delimiter(',')
      ->required();

  CommonOptions table_opts;
  CLI::App* table_cmd =
      app.add_subcommand("table", "run every tabulated scenario and summarise");
  add_common(table_cmd, table_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (run_cmd->parsed()) return do_run(run_opts, with_oracle, dump_h);
    if (sweep_cmd->parsed()) return do_sweep(sweep_opts, products);
    return do_table(table_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScenarioFailure;
  }
}
