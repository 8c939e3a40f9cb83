#include "dsap/network.hpp"

#include <stdexcept>
#include <string>

namespace dsap {

void NetworkConfig::validate() const {
  if (spin.twice_s < 1) throw std::invalid_argument("NetworkConfig: invalid spin magnitude");
  if (leaf_count < 1) throw std::invalid_argument("NetworkConfig: leaf_count must be >= 1");
  if (field_b <= 0.0) throw std::invalid_argument("NetworkConfig: field_b must be > 0");
  if (omega_max < 0.0) throw std::invalid_argument("NetworkConfig: omega_max must be >= 0");
  if (t_max <= 0.0) throw std::invalid_argument("NetworkConfig: t_max must be > 0");
  if (alpha < 0.0) throw std::invalid_argument("NetworkConfig: alpha must be >= 0");
}

int BasisState::excitations(const SpinMagnitude& s) const {
  int total = 0;
  for (int tm : twice_m) total += (tm + s.twice_s) / 2;
  return total;
}

std::string BasisState::label(const SpinMagnitude& s) const {
  // integer spin is labelled by m, half-integer spin by 2m
  const bool integer_spin = s.twice_s % 2 == 0;
  std::string out;
  for (size_t i = 0; i < twice_m.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(integer_spin ? twice_m[i] / 2 : twice_m[i]);
  }
  return out;
}

std::string BasisState::ket(const SpinMagnitude& s) const {
  const bool integer_spin = s.twice_s % 2 == 0;
  std::string out = "|";
  for (int tm : twice_m) {
    const int v = integer_spin ? tm / 2 : tm;
    out += std::to_string(v < 0 ? -v : v);
    if (v < 0) out += "\xcc\x84";  // combining overbar
  }
  out += "\xe2\x9f\xa9";  // rangle
  return out;
}

namespace {

void enumerate_recursive(const SpinMagnitude& spin, int sites, int remaining,
                         std::vector<int>& levels, std::vector<BasisState>& out) {
  const int site = static_cast<int>(levels.size());
  if (site == sites) {
    if (remaining == 0) {
      BasisState state;
      state.twice_m.reserve(levels.size());
      for (int lv : levels) state.twice_m.push_back(spin.twice_m(lv));
      out.push_back(std::move(state));
    }
    return;
  }
  const int capacity_after = (sites - site - 1) * spin.twice_s;
  for (int lv = 0; lv <= spin.twice_s; ++lv) {
    if (lv > remaining) break;
    if (remaining - lv > capacity_after) continue;
    levels.push_back(lv);
    enumerate_recursive(spin, sites, remaining - lv, levels, out);
    levels.pop_back();
  }
}

}  // namespace

Block Block::enumerate(const NetworkConfig& config, int excitations) {
  config.validate();
  if (excitations < 0 || excitations > config.max_excitations()) {
    throw std::invalid_argument("Block: empty excitation sector N = " +
                                std::to_string(excitations));
  }
  Block block;
  block.config_ = config;
  block.excitations_ = excitations;
  std::vector<int> levels;
  enumerate_recursive(config.spin, config.site_count(), excitations, levels,
                      block.states_);
  for (int i = 0; i < block.size(); ++i) {
    block.index_.emplace(block.states_[static_cast<size_t>(i)].twice_m, i);
  }
  return block;
}

int Block::index_of(const BasisState& state) const {
  const auto it = index_.find(state.twice_m);
  if (it == index_.end()) {
    throw std::out_of_range("Block: state " + state.label(config_.spin) +
                            " not in excitation sector N = " +
                            std::to_string(excitations_));
  }
  return it->second;
}

bool Block::contains(const BasisState& state) const {
  return index_.find(state.twice_m) != index_.end();
}

std::shared_ptr<const Block> enumerate_block(const NetworkConfig& config, int excitations) {
  return std::make_shared<const Block>(Block::enumerate(config, excitations));
}

bool same_block(const Block& a, const Block& b) {
  return a.excitations() == b.excitations() && a.size() == b.size() &&
         a.config().spin == b.config().spin &&
         a.config().leaf_count == b.config().leaf_count;
}

StateVector initial_state(const NetworkConfig& config, int left_twice_m) {
  const int left_level = config.spin.level_of(left_twice_m);  // validates the projection
  const int excitations = left_level;
  auto block = enumerate_block(config, excitations);

  BasisState target;
  target.twice_m.assign(static_cast<size_t>(config.site_count()), -config.spin.twice_s);
  target.twice_m[0] = left_twice_m;

  StateVector state;
  state.block = block;
  state.amplitudes = Eigen::VectorXcd::Zero(block->size());
  state.amplitudes[block->index_of(target)] = 1.0;
  return state;
}

}  // namespace dsap
