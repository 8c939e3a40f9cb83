#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dsap/hamiltonian.hpp"
#include "dsap/network.hpp"

namespace dsap {

// Closed-form final state for one tabulated transport scenario.
// Amplitudes are kept as exact square roots of rationals and evaluated
// to floating point on construction.
struct ReferenceState {
  std::string label;          // row id, e.g. "3d"
  StateVector state;
  double published_entanglement = 0.0;  // value quoted with the tabulated row
};

// The 18 tabulated (spin, leaves, excitations) rows:
//   2a-2c   spin-1/2, N = 1        3a-3f   spin-1,   N = 1 and 2
//   32a-32c spin-3/2, N = 1        4a-4f   spin-3/2, N = 2 and 3
// Throws std::invalid_argument for combinations that are not tabulated.
ReferenceState reference_final_state(const SpinMagnitude& spin, int leaves,
                                     int excitations);

// row ids in table order
const std::vector<std::string>& reference_row_ids();
// scenario behind a row id: (twice_s, leaves, left_twice_m)
struct ReferenceRow {
  std::string id;
  int twice_s = 1;
  int leaves = 2;
  int left_twice_m = 1;
  int excitations() const { return (left_twice_m + twice_s) / 2; }
};
const std::vector<ReferenceRow>& reference_rows();
std::optional<ReferenceRow> reference_row(const std::string& id);

// ---- analytic dark states ---------------------------------------------------

// Single-excitation dark state for n leaves at given pulse amplitudes:
//   n*omega_r on the L-excited state, -omega_l on each leaf-excited state,
// normalized.  An exact eigenvector of the block Hamiltonian for any alpha.
StateVector dark_state_single_excitation(const NetworkConfig& config,
                                         const PulseAmplitudes& amps);

// Two-excitation, two-leaf spin-1 dark state in its conventional
// all-positive form: 2 omega_r^2 |2000>, omega_l omega_r on the
// one-transferred states, omega_l^2 (2, 1, 1) on the leaf-only states,
// normalized.  Only an eigenvector at the schedule endpoints; see the
// spectral tests for how the continued eigenstate actually behaves.
StateVector dark_state_spin_one_two_leaves(const NetworkConfig& config,
                                           const PulseAmplitudes& amps);

}  // namespace dsap
