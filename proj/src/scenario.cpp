#include "dsap/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dsap {

namespace {

std::string fmt(double v, int precision = 17) {
  std::ostringstream out;
  out << std::setprecision(precision) << v;
  return out.str();
}

}  // namespace

NetworkConfig ScenarioConfig::network() const {
  NetworkConfig config;
  config.spin = SpinMagnitude(twice_s);
  config.leaf_count = leaves;
  config.field_b = field_b;
  config.alpha = alpha;
  config.omega_max = omega_max;
  config.t_max = t_max();
  config.validate();
  return config;
}

int parse_spin(const std::string& text) {
  const auto bad = [&] {
    return std::invalid_argument("spin '" + text + "' is not a half-integer >= 1/2");
  };
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    if (text.substr(slash + 1) != "2") throw bad();
    try {
      const int numerator = std::stoi(text.substr(0, slash));
      if (numerator < 1) throw bad();
      return numerator;
    } catch (const std::invalid_argument&) {
      throw bad();
    } catch (const std::out_of_range&) {
      throw bad();
    }
  }
  double value = 0.0;
  try {
    size_t used = 0;
    value = std::stod(text, &used);
    if (used != text.size()) throw bad();
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
  const double doubled = 2.0 * value;
  const int twice_s = static_cast<int>(std::lround(doubled));
  if (twice_s < 1 || std::abs(doubled - twice_s) > 1e-9) throw bad();
  return twice_s;
}

ScenarioConfig preset_scenario(const std::string& id) {
  std::string row_id = id;
  bool figure_form = false;
  if (row_id.rfind("fig", 0) == 0) {
    row_id = row_id.substr(3);
    figure_form = true;
  } else if (row_id.rfind("table-", 0) == 0) {
    row_id = row_id.substr(6);
  }
  const auto row = reference_row(row_id);
  if (!row || (figure_form && row_id.rfind("32", 0) == 0)) {
    throw std::invalid_argument("unknown preset '" + id + "'");
  }
  ScenarioConfig scenario;
  scenario.twice_s = row->twice_s;
  scenario.leaves = row->leaves;
  scenario.left_twice_m = row->left_twice_m;
  scenario.preset = row->id;
  return scenario;
}

ScenarioConfig parse_config_text(const std::string& text) {
  ScenarioConfig scenario;
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "preset") {
        const ScenarioConfig preset = preset_scenario(value);
        scenario.twice_s = preset.twice_s;
        scenario.leaves = preset.leaves;
        scenario.left_twice_m = preset.left_twice_m;
        scenario.preset = preset.preset;
      } else if (key == "spin") {
        scenario.twice_s = parse_spin(value);
      } else if (key == "leaves") {
        scenario.leaves = std::stoi(value);
      } else if (key == "left_projection") {
        scenario.left_twice_m = std::stoi(value);
      } else if (key == "field_b") {
        scenario.field_b = std::stod(value);
      } else if (key == "alpha") {
        scenario.alpha = std::stod(value);
      } else if (key == "omega_max") {
        scenario.omega_max = std::stod(value);
      } else if (key == "tmax_product") {
        scenario.tmax_product = std::stod(value);
      } else if (key == "samples") {
        scenario.samples = std::stoi(value);
      } else if (key == "out") {
        scenario.out_csv = value;
      } else if (key == "report") {
        scenario.out_report = value;
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(line_number) + ": " +
                                  e.what());
    }
  }
  return scenario;
}

ScenarioConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

bool RunSummary::passed() const {
  if (max_norm_drift > 1e-9) return false;
  if (track_broken) return false;
  if (fidelity >= 0.0 && fidelity < 0.99) return false;
  return true;
}

RunSummary run_scenario(const ScenarioConfig& scenario) {
  const NetworkConfig config = scenario.network();
  const StateVector initial = initial_state(config, scenario.left_twice_m);
  const Trajectory traj = evolve(config, initial, scenario.samples);
  const DarkStateTrack track = track_dark_state(config, initial, scenario.samples);
  return summarize_run(scenario, traj, track);
}

RunSummary summarize_run(const ScenarioConfig& scenario, const Trajectory& traj,
                         const DarkStateTrack& track) {
  const NetworkConfig config = scenario.network();

  RunSummary summary;
  summary.scenario = scenario;
  summary.max_norm_drift = traj.max_norm_drift();
  summary.max_mediator_population = traj.max_mediator_population();
  summary.min_gap = *std::min_element(track.min_gap.begin(), track.min_gap.end());
  summary.max_adiabaticity = track.max_adiabaticity();
  summary.track_broken = track.broken;

  const StateVector& final_state = traj.final_state;
  summary.entanglement_bits = entanglement_of_formation(final_state);
  {
    const ReducedDensityMatrix rho = partial_trace(final_state, {2});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.rho);
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
      summary.reduced_eigenvalues.push_back(std::clamp(solver.eigenvalues()[i], 0.0, 1.0));
    }
    std::sort(summary.reduced_eigenvalues.begin(), summary.reduced_eigenvalues.end(),
              std::greater<double>());
  }

  try {
    const ReferenceState reference = reference_final_state(
        config.spin, config.leaf_count, final_state.block->excitations());
    summary.row_label = reference.label;
    summary.fidelity = fidelity(final_state, reference.state);
    summary.published_entanglement = reference.published_entanglement;
  } catch (const std::invalid_argument&) {
    // no tabulated row for this scenario
  }

  if (final_state.block->excitations() >= 2) {
    try {
      summary.egalitarian = egalitarian_check(final_state);
      summary.has_egalitarian = true;
    } catch (const std::invalid_argument&) {
      summary.has_egalitarian = false;
    }
  }

  const Block& block = *final_state.block;
  std::vector<std::pair<std::string, double>> pops;
  for (int i = 0; i < block.size(); ++i) {
    const double p = std::norm(final_state.amplitudes[i]);
    if (p > 1e-4) pops.emplace_back(block.state(i).ket(config.spin), p);
  }
  std::sort(pops.begin(), pops.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  summary.final_populations = std::move(pops);
  return summary;
}

std::string trajectory_csv(const NetworkConfig& config, const Trajectory& traj,
                           const DarkStateTrack& track) {
  const Block& block = *traj.final_state.block;
  const size_t samples = traj.times.size();
  if (track.times.size() != samples) {
    throw std::invalid_argument("trajectory_csv: trajectory and track sample counts differ");
  }

  std::ostringstream out;
  out << "t,t_over_tmax,min_gap,adiabaticity_ratio,norm";
  for (int i = 0; i < block.size(); ++i) {
    out << ",\"" << block.state(i).label(config.spin) << "\"";
  }
  out << ",jz_L,jz_M";
  for (int leaf = 1; leaf <= config.leaf_count; ++leaf) out << ",jz_R" << leaf;
  out << "\n";

  for (size_t k = 0; k < samples; ++k) {
    out << fmt(traj.times[k]) << ',' << fmt(traj.times[k] / config.t_max) << ','
        << fmt(track.min_gap[k]) << ',' << fmt(track.adiabaticity[k]) << ','
        << fmt(traj.norms[k]);
    for (int i = 0; i < block.size(); ++i) {
      out << ',' << fmt(traj.populations(static_cast<int>(k), i));
    }
    for (int site = 0; site < config.site_count(); ++site) {
      out << ',' << fmt(traj.site_projections(static_cast<int>(k), site));
    }
    out << "\n";
  }
  return out.str();
}

std::string summary_text(const RunSummary& summary) {
  const ScenarioConfig& sc = summary.scenario;
  std::ostringstream out;
  out << "scenario: 2s=" << sc.twice_s << " leaves=" << sc.leaves
      << " left_2m=" << sc.left_twice_m << " N=" << sc.excitations()
      << " omega_max*t_max=" << fmt(sc.tmax_product, 6);
  if (!sc.preset.empty()) out << " (preset " << sc.preset << ")";
  out << "\n";

  out << "final populations:\n";
  for (const auto& [ket, pop] : summary.final_populations) {
    out << "  " << ket << "  " << fmt(pop, 6) << "\n";
  }
  if (!summary.row_label.empty()) {
    out << "fidelity vs tabulated row " << summary.row_label << ": "
        << fmt(summary.fidelity, 8) << "\n";
  }
  out << "entanglement of formation (leaf vs rest): " << fmt(summary.entanglement_bits, 7)
      << " bits";
  const double local_dim = static_cast<double>(sc.twice_s + 1);
  out << "  [/log2(d)=" << fmt(summary.entanglement_bits / std::log2(local_dim), 6) << "]";
  if (summary.published_entanglement >= 0.0) {
    out << "  (quoted value " << fmt(summary.published_entanglement, 6) << ")";
  }
  out << "\n";
  out << "reduced eigenvalues:";
  for (double lambda : summary.reduced_eigenvalues) out << " " << fmt(lambda, 6);
  out << "\n";
  if (summary.has_egalitarian) {
    out << "egalitarian sharing (most even first, mean |amplitude|):\n";
    for (const auto& row : summary.egalitarian.rows) {
      out << "  (";
      for (size_t i = 0; i < row.pattern.size(); ++i) {
        if (i) out << ",";
        out << row.pattern[i];
      }
      out << ")  " << fmt(row.mean_abs_amplitude, 6) << "  x" << row.configurations << "\n";
    }
    out << "egalitarian ordering " << (summary.egalitarian.monotone ? "holds" : "VIOLATED")
        << "\n";
  }
  out << "max mediator population: " << fmt(summary.max_mediator_population, 4) << "\n";
  out << "max norm drift: " << fmt(summary.max_norm_drift, 4) << "\n";
  out << "min gap: " << fmt(summary.min_gap, 6)
      << "  max adiabaticity ratio: " << fmt(summary.max_adiabaticity, 6) << "\n";
  out << "status: " << (summary.passed() ? "pass" : "FAIL") << "\n";
  return out.str();
}

std::string hamiltonian_dump_csv(const NetworkConfig& config, int excitations, double t) {
  const Block block = Block::enumerate(config, excitations);
  const HermitianMatrix h = assemble(config, block, pulses(t, config));
  std::ostringstream out;
  out << "row,col,re,im\n";
  for (int i = 0; i < block.size(); ++i) {
    for (int j = 0; j < block.size(); ++j) {
      if (std::abs(h(i, j)) == 0.0) continue;
      out << i << ',' << j << ',' << fmt(h(i, j).real()) << ',' << fmt(h(i, j).imag())
          << "\n";
    }
  }
  return out.str();
}

std::vector<SweepPoint> run_sweep(const ScenarioConfig& base,
                                  const std::vector<double>& tmax_products) {
  if (tmax_products.size() < 2) {
    throw std::invalid_argument("sweep needs >= 2 sweep points");
  }
  const ReferenceState reference = reference_final_state(
      SpinMagnitude(base.twice_s), base.leaves, base.excitations());

  std::vector<SweepPoint> points;
  for (double product : tmax_products) {
    ScenarioConfig scenario = base;
    scenario.tmax_product = product;
    const NetworkConfig config = scenario.network();
    const StateVector initial = initial_state(config, scenario.left_twice_m);
    const Trajectory traj = evolve(config, initial, scenario.samples);
    const DarkStateTrack track = track_dark_state(config, initial, scenario.samples);
    points.push_back({product, 1.0 - fidelity(traj.final_state, reference.state),
                      track.max_adiabaticity()});
  }
  return points;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::ostringstream out;
  bool monotone = true;
  for (size_t i = 1; i < points.size(); ++i) {
    if (points[i].infidelity > points[i - 1].infidelity) monotone = false;
  }
  if (!monotone) out << "# warning: infidelity is not monotonically nonincreasing\n";
  out << "tmax_product,infidelity,max_adiabaticity_ratio\n";
  for (const auto& p : points) {
    out << fmt(p.tmax_product) << ',' << fmt(p.infidelity) << ','
        << fmt(p.max_adiabaticity) << "\n";
  }
  return out.str();
}

std::vector<TableRow> run_table(double tmax_product, int samples) {
  std::vector<TableRow> rows;
  for (const auto& ref_row : reference_rows()) {
    ScenarioConfig scenario = preset_scenario("table-" + ref_row.id);
    scenario.tmax_product = tmax_product;
    scenario.samples = samples;
    const RunSummary summary = run_scenario(scenario);

    const ReferenceState reference = reference_final_state(
        SpinMagnitude(ref_row.twice_s), ref_row.leaves, ref_row.excitations());
    TableRow row;
    row.id = ref_row.id;
    row.fidelity = summary.fidelity;
    row.entanglement_sim = summary.entanglement_bits;
    row.entanglement_ref = entanglement_of_formation(reference.state);
    row.published_entanglement = reference.published_entanglement;
    row.passed = summary.passed() && row.fidelity >= 0.99 &&
                 std::abs(row.entanglement_sim - row.entanglement_ref) <= 1e-3 &&
                 summary.max_mediator_population < 1e-3;
    rows.push_back(row);
  }
  return rows;
}

std::string table_report(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "row" << std::right << std::setw(12) << "fidelity"
      << std::setw(12) << "EoF(sim)" << std::setw(12) << "EoF(ref)" << std::setw(12)
      << "EoF(quoted)" << "  status\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(6) << row.id << std::right << std::fixed
        << std::setprecision(6) << std::setw(12) << row.fidelity << std::setw(12)
        << row.entanglement_sim << std::setw(12) << row.entanglement_ref << std::setw(12)
        << std::setprecision(4) << row.published_entanglement << std::defaultfloat
        << "  " << (row.passed ? "pass" : "FAIL") << "\n";
  }
  const bool all = std::all_of(rows.begin(), rows.end(),
                               [](const TableRow& r) { return r.passed; });
  out << (all ? "all rows pass" : "some rows FAILED") << "\n";
  return out.str();
}

}  // namespace dsap
