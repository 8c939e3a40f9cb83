#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "dsap/network.hpp"

namespace dsap {

using HermitianMatrix = Eigen::MatrixXcd;
using SparseHermitian = Eigen::SparseMatrix<std::complex<double>>;

// Counter-intuitive squared-sinusoid schedule:
//   omega_l(t) = omega_max sin(pi t / 2 t_max)
//   omega_r(t) = omega_max cos(pi t / 2 t_max)
// so the unpopulated M-R bonds are fully coupled at t = 0.
struct PulseAmplitudes {
  double omega_l = 0.0;
  double omega_r = 0.0;
};

struct PulseRates {
  double domega_l = 0.0;
  double domega_r = 0.0;
};

PulseAmplitudes pulses(double t, const NetworkConfig& config);
PulseRates pulse_rates(double t, const NetworkConfig& config);

// Time-independent pieces of the block-restricted Hamiltonian
//   H(t) = field_b * diag_field + alpha * diag_zz
//          + omega_l * coupling_l + omega_r * coupling_r
// All pieces are real symmetric; the complex-valued assembly is a cast.
class BlockOperators {
 public:
  explicit BlockOperators(const Block& block);
  // field_b/alpha taken from `config`, basis from `block`
  BlockOperators(const NetworkConfig& config, const Block& block);

  const Eigen::VectorXd& diag_field() const { return diag_field_; }
  const Eigen::VectorXd& diag_zz() const { return diag_zz_; }
  const Eigen::MatrixXd& coupling_l() const { return coupling_l_; }
  const Eigen::MatrixXd& coupling_r() const { return coupling_r_; }

  Eigen::MatrixXd real_hamiltonian(const PulseAmplitudes& amps) const;
  // coupling part only, evaluated at the given pulse slopes (dH/dt)
  Eigen::MatrixXd real_rate_matrix(const PulseRates& rates) const;

 private:
  double field_b_ = 1.0;
  double alpha_ = 0.0;
  Eigen::VectorXd diag_field_;   // sum_i m_i per basis state
  Eigen::VectorXd diag_zz_;      // m_L m_M + m_M sum_j m_Rj per basis state
  Eigen::MatrixXd coupling_l_;   // J+_L J-_M + h.c. at unit amplitude
  Eigen::MatrixXd coupling_r_;   // sum_j (J+_M J-_Rj + h.c.) at unit amplitude
};

// Full Hamiltonian on a block at the given pulse amplitudes.
HermitianMatrix assemble(const NetworkConfig& config, const Block& block,
                         const PulseAmplitudes& amps);

// dH/dt on a block (flip-flop part with the amplitudes replaced by rates).
HermitianMatrix assemble_rate(const NetworkConfig& config, const Block& block,
                              const PulseRates& rates);

// ---- full product space (oracle support) -----------------------------------

// (2s+1)^(n+2); throws std::length_error above the 10^4 guard
long full_dimension(const NetworkConfig& config);

// mixed-radix index of a product state, site 0 most significant, so full
// enumeration order restricted to a sector matches the block ordering
long full_index(const NetworkConfig& config, const BasisState& state);
BasisState full_state(const NetworkConfig& config, long index);

// Same operator on the whole product space, block-diagonal in the
// excitation sectors.
SparseHermitian assemble_full(const NetworkConfig& config, const PulseAmplitudes& amps);

// embed block-restricted amplitudes into the full product space
Eigen::VectorXcd embed_in_full(const StateVector& state);

}  // namespace dsap
