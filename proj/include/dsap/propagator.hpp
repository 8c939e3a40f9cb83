#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dsap/hamiltonian.hpp"
#include "dsap/network.hpp"

namespace dsap {

// Time-sampled record of a driven evolution.
struct Trajectory {
  std::vector<double> times;
  Eigen::MatrixXd populations;       // samples x block dimension
  Eigen::MatrixXd site_projections;  // samples x site count, <Jz_i>
  std::vector<double> norms;
  StateVector final_state;

  double max_norm_drift() const;
  // total weight on basis states with the mediator above its lowest
  // projection, maximised over samples
  double max_mediator_population() const;
};

// substep count used when the caller passes substeps = 0
int default_substeps(const NetworkConfig& config, int samples);

// Integrate i dpsi/dt = H(t) psi from t = 0 to t_max under the pulse
// schedule, recording `samples` equally spaced snapshots.  Uses a
// fourth-order commutator-free Magnus scheme with exact (eigenbasis)
// exponentials per substep, so every step is unitary by construction.
Trajectory evolve(const NetworkConfig& config, const StateVector& initial,
                  int samples = 501, int substeps = 0);

struct FullTrajectory {
  std::vector<double> times;
  Eigen::MatrixXd populations;  // samples x full dimension
  std::vector<double> norms;
  Eigen::VectorXcd final_state;

  double max_norm_drift() const;
};

// Same contract on the full (2s+1)^(n+2)-dimensional product space,
// with no block restriction assumed.  Kept independent of the block
// path: the Zeeman term is split off through its verified commutation
// with the rest and the remainder is propagated by Lanczos exponentials.
FullTrajectory evolve_full(const NetworkConfig& config,
                           const Eigen::VectorXcd& initial,
                           int samples = 101, int substeps = 0);

}  // namespace dsap
