#include "dsap/reference_states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dsap {

namespace {

// amplitude sqrt(num/den) on every distinct permutation of a leaf pattern
struct PatternTerm {
  std::vector<int> leaf_quanta;  // sorted descending
  long num = 1;
  long den = 1;
};

struct RowDefinition {
  ReferenceRow row;
  std::vector<PatternTerm> terms;      // empty for single-excitation W rows
  double published_entanglement = 0.0;
};

NetworkConfig default_network(int twice_s, int leaves) {
  NetworkConfig config;
  config.spin = SpinMagnitude(twice_s);
  config.leaf_count = leaves;
  return config;
}

const std::vector<RowDefinition>& row_definitions() {
  static const std::vector<RowDefinition> rows = [] {
    std::vector<RowDefinition> defs;
    auto w_row = [&](const std::string& id, int twice_s, int leaves, double published) {
      std::vector<int> pattern(static_cast<size_t>(leaves), 0);
      pattern[0] = 1;
      defs.push_back({{id, twice_s, leaves, 2 - twice_s}, {{pattern, 1, leaves}}, published});
    };
    // single excitation: W state over the leaves, any spin magnitude
    w_row("2a", 1, 2, 1.0);
    w_row("2b", 1, 3, 0.9183);
    w_row("2c", 1, 4, 0.8113);
    w_row("3a", 2, 2, 1.0);
    w_row("3b", 2, 3, 0.9183);
    w_row("3c", 2, 4, 0.8113);
    defs.push_back({{"3d", 2, 2, 2}, {{{1, 1}, 2, 3}, {{2, 0}, 1, 6}}, 0.8072});
    defs.push_back({{"3e", 2, 3, 2}, {{{1, 1, 0}, 4, 15}, {{2, 0, 0}, 1, 15}}, 0.7264});
    defs.push_back({{"3f", 2, 4, 2}, {{{1, 1, 0, 0}, 1, 7}, {{2, 0, 0, 0}, 1, 28}}, 0.5152});
    w_row("32a", 3, 2, 1.0);
    w_row("32b", 3, 3, 0.9183);
    w_row("32c", 3, 4, 0.8113);
    defs.push_back({{"4a", 3, 2, 1}, {{{1, 1}, 3, 5}, {{2, 0}, 1, 5}}, 0.9021});
    defs.push_back({{"4b", 3, 3, 1}, {{{1, 1, 0}, 1, 4}, {{2, 0, 0}, 1, 12}}, 0.7080});
    defs.push_back({{"4c", 3, 4, 1}, {{{1, 1, 0, 0}, 3, 22}, {{2, 0, 0, 0}, 1, 22}}, 0.4997});
    defs.push_back({{"4d", 3, 2, 3}, {{{2, 1}, 9, 20}, {{3, 0}, 1, 20}}, 0.9763});
    // quoted with sqrt(85) denominators, which misses normalization by
    // 84/85; the state below is the normalized form
    defs.push_back({{"4e", 3, 3, 3},
                    {{{1, 1, 1}, 27, 84}, {{2, 1, 0}, 9, 84}, {{3, 0, 0}, 1, 84}},
                    0.6297});
    defs.push_back({{"4f", 3, 4, 3},
                    {{{1, 1, 1, 0}, 27, 220}, {{2, 1, 0, 0}, 9, 220}, {{3, 0, 0, 0}, 1, 220}},
                    0.3889});
    return defs;
  }();
  return rows;
}

BasisState leaf_configuration(const NetworkConfig& config, const std::vector<int>& leaf_quanta) {
  BasisState state;
  state.twice_m.assign(static_cast<size_t>(config.site_count()), -config.spin.twice_s);
  for (size_t leaf = 0; leaf < leaf_quanta.size(); ++leaf) {
    state.twice_m[2 + leaf] = config.spin.twice_m(leaf_quanta[leaf]);
  }
  return state;
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows() {
  static const std::vector<ReferenceRow> rows = [] {
    std::vector<ReferenceRow> out;
    for (const auto& def : row_definitions()) out.push_back(def.row);
    return out;
  }();
  return rows;
}

const std::vector<std::string>& reference_row_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& row : reference_rows()) out.push_back(row.id);
    return out;
  }();
  return ids;
}

std::optional<ReferenceRow> reference_row(const std::string& id) {
  for (const auto& row : reference_rows()) {
    if (row.id == id) return row;
  }
  return std::nullopt;
}

ReferenceState reference_final_state(const SpinMagnitude& spin, int leaves, int excitations) {
  for (const auto& def : row_definitions()) {
    if (def.row.twice_s != spin.twice_s || def.row.leaves != leaves ||
        def.row.excitations() != excitations) {
      continue;
    }
    const NetworkConfig config = default_network(spin.twice_s, leaves);
    auto block = enumerate_block(config, excitations);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(block->size());
    for (const auto& term : def.terms) {
      const double amplitude =
          std::sqrt(static_cast<double>(term.num) / static_cast<double>(term.den));
      std::vector<int> pattern = term.leaf_quanta;
      std::sort(pattern.begin(), pattern.end());
      do {
        amps[block->index_of(leaf_configuration(config, pattern))] = amplitude;
      } while (std::next_permutation(pattern.begin(), pattern.end()));
    }
    return {def.row.id, {block, std::move(amps)}, def.published_entanglement};
  }
  throw std::invalid_argument("reference_final_state: no tabulated row for 2s = " +
                              std::to_string(spin.twice_s) + ", leaves = " +
                              std::to_string(leaves) + ", N = " + std::to_string(excitations));
}

StateVector dark_state_single_excitation(const NetworkConfig& config,
                                         const PulseAmplitudes& amps) {
  config.validate();
  auto block = enumerate_block(config, 1);
  const int n = config.leaf_count;

  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(block->size());
  BasisState state;
  state.twice_m.assign(static_cast<size_t>(config.site_count()), -config.spin.twice_s);
  state.twice_m[0] += 2;
  v[block->index_of(state)] = n * amps.omega_r;
  state.twice_m[0] -= 2;
  for (int leaf = 0; leaf < n; ++leaf) {
    state.twice_m[2 + leaf] += 2;
    v[block->index_of(state)] = -amps.omega_l;
    state.twice_m[2 + leaf] -= 2;
  }
  const double norm = v.norm();
  if (norm == 0.0) {
    throw std::invalid_argument("dark_state_single_excitation: both pulse amplitudes vanish");
  }
  return {block, v / norm};
}

StateVector dark_state_spin_one_two_leaves(const NetworkConfig& config,
                                           const PulseAmplitudes& amps) {
  config.validate();
  if (config.spin.twice_s != 2 || config.leaf_count != 2) {
    throw std::invalid_argument("dark_state_spin_one_two_leaves: needs spin-1 with two leaves");
  }
  auto block = enumerate_block(config, 2);

  auto at = [&](int ql, int qm, int q1, int q2) {
    BasisState state;
    state.twice_m = {config.spin.twice_m(ql), config.spin.twice_m(qm),
                     config.spin.twice_m(q1), config.spin.twice_m(q2)};
    return block->index_of(state);
  };
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(block->size());
  v[at(2, 0, 0, 0)] = 2.0 * amps.omega_r * amps.omega_r;
  v[at(1, 0, 1, 0)] = amps.omega_l * amps.omega_r;
  v[at(1, 0, 0, 1)] = amps.omega_l * amps.omega_r;
  v[at(0, 0, 1, 1)] = 2.0 * amps.omega_l * amps.omega_l;
  v[at(0, 0, 2, 0)] = amps.omega_l * amps.omega_l;
  v[at(0, 0, 0, 2)] = amps.omega_l * amps.omega_l;
  const double norm = v.norm();
  if (norm == 0.0) {
    throw std::invalid_argument("dark_state_spin_one_two_leaves: both pulse amplitudes vanish");
  }
  return {block, v / norm};
}

}  // namespace dsap
