#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dsap/spin.hpp"

namespace dsap {

// Branched (star) network: input spin L, mediator M, leaves R_1..R_n,
// in the fixed site order [L, M, R_1, ..., R_n].  All sites carry the
// same spin magnitude.  Energies are in units of the Zeeman field B,
// times in 1/B.
struct NetworkConfig {
  SpinMagnitude spin;
  int leaf_count = 2;
  double field_b = 1.0;    // uniform Z field
  double alpha = 0.01;     // always-on ZZ coupling on the L-M and M-R bonds
  double omega_max = 0.01; // peak flip-flop coupling
  double t_max = 1.0e5;    // total transport time

  int site_count() const { return leaf_count + 2; }
  int max_excitations() const { return site_count() * spin.twice_s; }

  // throws std::invalid_argument on any violated bound
  void validate() const;
};

// Product state of definite projection per site, stored as 2m values.
struct BasisState {
  std::vector<int> twice_m;

  int excitations(const SpinMagnitude& s) const;

  // comma-joined projection labels, m for integer spin and 2m for
  // half-integer spin (e.g. "1,-1,-1,-1")
  std::string label(const SpinMagnitude& s) const;
  // ket form with combining overbars for negative labels, e.g. |11̄1̄1̄⟩
  std::string ket(const SpinMagnitude& s) const;

  bool operator==(const BasisState&) const = default;
  auto operator<=>(const BasisState&) const = default;
};

// Ordered basis of all product states with a fixed total excitation
// number N = sum_i (m_i + s).  Ordering is lexicographic on the
// projection vector; immutable after construction.
class Block {
 public:
  static Block enumerate(const NetworkConfig& config, int excitations);

  const NetworkConfig& config() const { return config_; }
  int excitations() const { return excitations_; }
  int size() const { return static_cast<int>(states_.size()); }
  const std::vector<BasisState>& states() const { return states_; }
  const BasisState& state(int i) const { return states_[static_cast<size_t>(i)]; }

  // position of a state in the basis; throws std::out_of_range if absent
  int index_of(const BasisState& state) const;
  bool contains(const BasisState& state) const;

 private:
  NetworkConfig config_;
  int excitations_ = 0;
  std::vector<BasisState> states_;
  std::map<std::vector<int>, int> index_;
};

std::shared_ptr<const Block> enumerate_block(const NetworkConfig& config, int excitations);

// Normalized complex amplitudes over a block basis.
struct StateVector {
  std::shared_ptr<const Block> block;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

// blocks are interchangeable when they span the same basis
bool same_block(const Block& a, const Block& b);

// Product state with L at the given projection and every other site in
// its lowest projection; the unit vector lives in the sector
// N = (left_twice_m + 2s) / 2.
StateVector initial_state(const NetworkConfig& config, int left_twice_m);

}  // namespace dsap
