#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dsap/entanglement.hpp"
#include "dsap/network.hpp"
#include "dsap/propagator.hpp"
#include "dsap/reference_states.hpp"
#include "dsap/spectral.hpp"

namespace dsap {

// Full experiment definition as consumed by the command line.
struct ScenarioConfig {
  int twice_s = 1;
  int leaves = 2;
  double field_b = 1.0;
  double alpha = 0.01;
  double omega_max = 0.01;
  double tmax_product = 1000.0;  // omega_max * t_max, the adiabaticity budget
  int left_twice_m = 1;          // initial projection of L, as 2m
  int samples = 501;
  std::string preset;            // row id when built from a preset
  std::string out_csv;           // trajectory CSV path, empty = skip
  std::string out_report;        // summary path, empty = stdout

  double t_max() const { return tmax_product / omega_max; }
  NetworkConfig network() const;
  int excitations() const { return (left_twice_m + twice_s) / 2; }
};

// Preset ids: "fig<row>" for rows with a figure panel, "table-<row>" for
// every row, or a bare row id.  Throws std::invalid_argument when unknown.
ScenarioConfig preset_scenario(const std::string& id);

// flat key=value file with exactly the ScenarioConfig keys; unknown keys,
// malformed lines and unreadable files throw std::invalid_argument
ScenarioConfig parse_config_file(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text);

// "1/2", "0.5", "1", "3/2", ... -> 2s; throws when not a half-integer >= 1/2
int parse_spin(const std::string& text);

struct RunSummary {
  ScenarioConfig scenario;
  std::string row_label;               // matched tabulated row, empty if none
  double fidelity = -1.0;              // vs the tabulated final state
  double entanglement_bits = 0.0;      // leaf vs rest, log2
  std::vector<double> reduced_eigenvalues;
  double published_entanglement = -1.0;  // annotation only
  double max_mediator_population = 0.0;
  double max_norm_drift = 0.0;
  double min_gap = 0.0;
  double max_adiabaticity = 0.0;
  bool track_broken = false;
  std::vector<std::pair<std::string, double>> final_populations;  // ket, |amp|^2
  EgalitarianReport egalitarian;
  bool has_egalitarian = false;

  bool passed() const;  // fidelity >= 0.99 when a reference exists, contracts hold
};

RunSummary run_scenario(const ScenarioConfig& scenario);
// summary from an already-computed evolution
RunSummary summarize_run(const ScenarioConfig& scenario, const Trajectory& traj,
                         const DarkStateTrack& track);

std::string trajectory_csv(const NetworkConfig& config, const Trajectory& traj,
                           const DarkStateTrack& track);
std::string summary_text(const RunSummary& summary);
// debugging dump of the block Hamiltonian at time t, one row,col,re,im line
// per stored entry
std::string hamiltonian_dump_csv(const NetworkConfig& config, int excitations, double t);

struct SweepPoint {
  double tmax_product = 0.0;
  double infidelity = 0.0;
  double max_adiabaticity = 0.0;
};

// Re-runs the scenario across adiabaticity budgets; throws when fewer
// than two sweep points are requested.
std::vector<SweepPoint> run_sweep(const ScenarioConfig& base,
                                  const std::vector<double>& tmax_products);
std::string sweep_csv(const std::vector<SweepPoint>& points);

struct TableRow {
  std::string id;
  double fidelity = 0.0;
  double entanglement_sim = 0.0;
  double entanglement_ref = 0.0;
  double published_entanglement = 0.0;
  bool passed = false;
};

// every tabulated scenario under the default budget
std::vector<TableRow> run_table(double tmax_product = 1000.0, int samples = 501);
std::string table_report(const std::vector<TableRow>& rows);

}  // namespace dsap
