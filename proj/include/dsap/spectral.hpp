#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dsap/hamiltonian.hpp"
#include "dsap/network.hpp"

namespace dsap {

struct EigenSnapshot {
  double time = 0.0;
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // orthonormal columns
};

EigenSnapshot eigen_snapshot(const HermitianMatrix& hamiltonian, double t);

// Eigenstate continuation along the pulse schedule.  Consecutive
// snapshots are matched by maximum overlap; inside a degenerate
// eigenvalue group the previous vector is projected onto the group's
// eigenspace and renormalized, which makes the continuation
// well-defined when the ordering is ambiguous.
struct DarkStateTrack {
  std::vector<double> times;
  std::vector<int> tracked_index;
  std::vector<Eigen::VectorXcd> vectors;
  std::vector<double> min_gap;       // distance to the nearest distinct eigenvalue
  std::vector<double> adiabaticity;  // max |<phi|dH/dt|psi>| / |E_phi - E_psi|
  double min_overlap = 1.0;          // smallest continuation overlap encountered
  bool broken = false;               // some continuation overlap fell below 0.5

  double max_adiabaticity() const;
};

DarkStateTrack track_dark_state(const NetworkConfig& config,
                                const StateVector& initial, int samples = 501);

// Adiabaticity functional for one snapshot: the largest ratio of the
// drive matrix element to the energy gap over all states outside the
// tracked eigenvalue group.  Degenerate partners with a nonzero
// matrix element yield +infinity.
double adiabaticity_ratio(const EigenSnapshot& snapshot,
                          const HermitianMatrix& dh_dt, int tracked_index);

}  // namespace dsap
