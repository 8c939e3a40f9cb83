#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsap/hamiltonian.hpp"
#include "dsap/network.hpp"

namespace dsap {

struct OracleCheck {
  std::string name;
  double deviation = 0.0;
  double bound = 0.0;
  bool passed = false;
};

struct OracleReport {
  std::string scenario;
  std::vector<OracleCheck> checks;

  bool all_passed() const;
  std::string str() const;
};

// Evolves the same initial state once block-restricted and once on the
// full product space, and reports the overlap deficit at t_max plus the
// largest weight that ever leaks out of the initial excitation sector.
OracleReport check_block_vs_full(const NetworkConfig& config, int left_twice_m,
                                 int samples = 101, int substeps = 0);

// Rebuilds the reduced density matrix by forming the embedded outer
// product and tracing indices naively, then compares entrywise against
// partial_trace.
OracleReport check_naive_partial_trace(const StateVector& state,
                                       const std::vector<int>& keep);

// Enumerates every product state, bins by excitation number and compares
// the per-sector counts against enumerate_block.
OracleReport check_counts(const NetworkConfig& config);

// max |[H, Jz_total]| entry over the full product space at the given
// amplitudes (zero when the flip-flop terms conserve excitations)
double excitation_commutator_residual(const NetworkConfig& config,
                                      const PulseAmplitudes& amps);

// seeded random unit vector on a block, for reproducible oracle runs
StateVector random_block_state(const NetworkConfig& config, int excitations,
                               std::uint64_t seed);

}  // namespace dsap
