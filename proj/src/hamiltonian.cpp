#include "dsap/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsap {

namespace {

constexpr long kFullDimensionGuard = 10000;

void check_pulse_time(double t, const NetworkConfig& config) {
  if (!(t >= 0.0) || !(t <= config.t_max)) {
    throw std::invalid_argument("pulses: t = " + std::to_string(t) +
                                " outside [0, " + std::to_string(config.t_max) + "]");
  }
}

}  // namespace

PulseAmplitudes pulses(double t, const NetworkConfig& config) {
  check_pulse_time(t, config);
  const double phase = std::numbers::pi * t / (2.0 * config.t_max);
  return {config.omega_max * std::sin(phase), config.omega_max * std::cos(phase)};
}

PulseRates pulse_rates(double t, const NetworkConfig& config) {
  check_pulse_time(t, config);
  const double w = std::numbers::pi / (2.0 * config.t_max);
  const double phase = w * t;
  return {config.omega_max * w * std::cos(phase), -config.omega_max * w * std::sin(phase)};
}

BlockOperators::BlockOperators(const Block& block)
    : BlockOperators(block.config(), block) {}

BlockOperators::BlockOperators(const NetworkConfig& config, const Block& block) {
  const SpinMagnitude spin = block.config().spin;
  const int dim = block.size();
  const int sites = block.config().site_count();
  field_b_ = config.field_b;
  alpha_ = config.alpha;

  diag_field_.resize(dim);
  diag_zz_.resize(dim);
  coupling_l_ = Eigen::MatrixXd::Zero(dim, dim);
  coupling_r_ = Eigen::MatrixXd::Zero(dim, dim);

  for (int i = 0; i < dim; ++i) {
    const BasisState& state = block.state(i);
    double total_m = 0.0, zz = 0.0;
    const double m_l = 0.5 * state.twice_m[0];
    const double m_m = 0.5 * state.twice_m[1];
    for (int site = 0; site < sites; ++site) total_m += 0.5 * state.twice_m[site];
    zz = m_l * m_m;
    for (int leaf = 2; leaf < sites; ++leaf) zz += m_m * 0.5 * state.twice_m[leaf];
    diag_field_[i] = total_m;
    diag_zz_[i] = zz;

    // one quantum hopping from a neighbour onto its bond partner; each
    // directed move contributes once, so both triangles get filled
    auto add_hop = [&](int from_site, int to_site, Eigen::MatrixXd& target) {
      const int from_level = spin.level_of(state.twice_m[from_site]);
      const int to_level = spin.level_of(state.twice_m[to_site]);
      if (from_level == 0 || to_level == spin.twice_s) return;
      BasisState moved = state;
      moved.twice_m[from_site] -= 2;
      moved.twice_m[to_site] += 2;
      const int j = block.index_of(moved);
      target(j, i) += spin.raise_amplitude(to_level) * spin.raise_amplitude(from_level - 1);
    };
    add_hop(1, 0, coupling_l_);  // J+_L J-_M
    add_hop(0, 1, coupling_l_);  // J-_L J+_M
    for (int leaf = 2; leaf < sites; ++leaf) {
      add_hop(leaf, 1, coupling_r_);  // J+_M J-_Rj
      add_hop(1, leaf, coupling_r_);  // J-_M J+_Rj
    }
  }
}

Eigen::MatrixXd BlockOperators::real_hamiltonian(const PulseAmplitudes& amps) const {
  Eigen::MatrixXd h = amps.omega_l * coupling_l_ + amps.omega_r * coupling_r_;
  h.diagonal() += field_b_ * diag_field_ + alpha_ * diag_zz_;
  return h;
}

Eigen::MatrixXd BlockOperators::real_rate_matrix(const PulseRates& rates) const {
  return rates.domega_l * coupling_l_ + rates.domega_r * coupling_r_;
}

HermitianMatrix assemble(const NetworkConfig& config, const Block& block,
                         const PulseAmplitudes& amps) {
  if (block.config().spin.twice_s != config.spin.twice_s ||
      block.config().leaf_count != config.leaf_count) {
    throw std::invalid_argument("assemble: block does not belong to this network");
  }
  BlockOperators ops(block);
  return ops.real_hamiltonian(amps).cast<std::complex<double>>();
}

HermitianMatrix assemble_rate(const NetworkConfig& config, const Block& block,
                              const PulseRates& rates) {
  if (block.config().spin.twice_s != config.spin.twice_s ||
      block.config().leaf_count != config.leaf_count) {
    throw std::invalid_argument("assemble_rate: block does not belong to this network");
  }
  BlockOperators ops(block);
  return ops.real_rate_matrix(rates).cast<std::complex<double>>();
}

// ---- full product space -----------------------------------------------------

long full_dimension(const NetworkConfig& config) {
  config.validate();
  long dim = 1;
  for (int site = 0; site < config.site_count(); ++site) {
    dim *= config.spin.dimension();
    if (dim > kFullDimensionGuard) {
      throw std::length_error("full product space exceeds the 10^4 dimension guard");
    }
  }
  return dim;
}

long full_index(const NetworkConfig& config, const BasisState& state) {
  long index = 0;
  for (int site = 0; site < config.site_count(); ++site) {
    index = index * config.spin.dimension() +
            config.spin.level_of(state.twice_m[static_cast<size_t>(site)]);
  }
  return index;
}

BasisState full_state(const NetworkConfig& config, long index) {
  const int sites = config.site_count();
  BasisState state;
  state.twice_m.assign(static_cast<size_t>(sites), 0);
  for (int site = sites - 1; site >= 0; --site) {
    const int level = static_cast<int>(index % config.spin.dimension());
    state.twice_m[static_cast<size_t>(site)] = config.spin.twice_m(level);
    index /= config.spin.dimension();
  }
  return state;
}

SparseHermitian assemble_full(const NetworkConfig& config, const PulseAmplitudes& amps) {
  const long dim = full_dimension(config);
  const SpinMagnitude spin = config.spin;
  const int sites = config.site_count();

  std::vector<Eigen::Triplet<std::complex<double>>> triplets;
  triplets.reserve(static_cast<size_t>(dim) * static_cast<size_t>(sites + 2));

  for (long i = 0; i < dim; ++i) {
    const BasisState state = full_state(config, i);
    double total_m = 0.0;
    for (int site = 0; site < sites; ++site) total_m += 0.5 * state.twice_m[site];
    const double m_l = 0.5 * state.twice_m[0];
    const double m_m = 0.5 * state.twice_m[1];
    double zz = m_l * m_m;
    for (int leaf = 2; leaf < sites; ++leaf) zz += m_m * 0.5 * state.twice_m[leaf];
    triplets.emplace_back(i, i, config.field_b * total_m + config.alpha * zz);

    auto add_hop = [&](int from_site, int to_site, double amplitude) {
      const int from_level = spin.level_of(state.twice_m[from_site]);
      const int to_level = spin.level_of(state.twice_m[to_site]);
      if (from_level == 0 || to_level == spin.twice_s) return;
      BasisState moved = state;
      moved.twice_m[from_site] -= 2;
      moved.twice_m[to_site] += 2;
      const double element =
          amplitude * spin.raise_amplitude(to_level) * spin.raise_amplitude(from_level - 1);
      triplets.emplace_back(full_index(config, moved), i, element);
    };
    add_hop(1, 0, amps.omega_l);
    add_hop(0, 1, amps.omega_l);
    for (int leaf = 2; leaf < sites; ++leaf) {
      add_hop(leaf, 1, amps.omega_r);
      add_hop(1, leaf, amps.omega_r);
    }
  }

  SparseHermitian h(dim, dim);
  h.setFromTriplets(triplets.begin(), triplets.end());
  h.makeCompressed();
  return h;
}

Eigen::VectorXcd embed_in_full(const StateVector& state) {
  const NetworkConfig& config = state.block->config();
  Eigen::VectorXcd full = Eigen::VectorXcd::Zero(full_dimension(config));
  for (int i = 0; i < state.block->size(); ++i) {
    full[full_index(config, state.block->state(i))] = state.amplitudes[i];
  }
  return full;
}

}  // namespace dsap
