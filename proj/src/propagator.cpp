#include "dsap/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsap {

namespace {

using Complex = std::complex<double>;

// fourth-order commutator-free Magnus scheme: two exponentials per step
// built from the Hamiltonian at the two Gauss points of the step
struct Cf4Coefficients {
  double node1, node2;    // Gauss nodes as fractions of the step
  double weight_lo, weight_hi;
};

Cf4Coefficients cf4() {
  const double root3 = std::sqrt(3.0);
  return {0.5 - root3 / 6.0, 0.5 + root3 / 6.0, (3.0 - 2.0 * root3) / 12.0,
          (3.0 + 2.0 * root3) / 12.0};
}

int round_to_segments(int substeps, int segments) {
  const int per_segment = (substeps + segments - 1) / segments;
  return std::max(1, per_segment) * segments;
}

// exp(-i dt H) psi through the eigenbasis of the real symmetric H
void apply_exponential(const Eigen::MatrixXd& h, double dt, Eigen::VectorXcd& psi,
                       double t_fail) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("evolve: eigensolver failed at t = " + std::to_string(t_fail));
  }
  const Eigen::VectorXcd phases =
      (Complex(0.0, -dt) * solver.eigenvalues().cast<Complex>().array()).exp();
  psi = solver.eigenvectors() *
        (phases.array() * (solver.eigenvectors().transpose() * psi).array()).matrix();
}

}  // namespace

double Trajectory::max_norm_drift() const {
  double drift = 0.0;
  for (double n : norms) drift = std::max(drift, std::abs(n - 1.0));
  return drift;
}

double Trajectory::max_mediator_population() const {
  const Block& block = *final_state.block;
  const int lowest = -block.config().spin.twice_s;
  Eigen::VectorXd mask(block.size());
  for (int i = 0; i < block.size(); ++i) {
    mask[i] = block.state(i).twice_m[1] > lowest ? 1.0 : 0.0;
  }
  return (populations * mask).maxCoeff();
}

int default_substeps(const NetworkConfig& config, int samples) {
  const int budget = static_cast<int>(std::ceil(16.0 * config.omega_max * config.t_max));
  return round_to_segments(std::max({2 * (samples - 1), 2000, budget}), samples - 1);
}

Trajectory evolve(const NetworkConfig& config, const StateVector& initial,
                  int samples, int substeps) {
  config.validate();
  if (samples < 2) throw std::invalid_argument("evolve: samples must be >= 2");
  if (!initial.block) throw std::invalid_argument("evolve: initial state has no block");
  if (std::abs(initial.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("evolve: initial state is not normalized");
  }
  const Block& block = *initial.block;
  if (block.config().spin.twice_s != config.spin.twice_s ||
      block.config().leaf_count != config.leaf_count) {
    throw std::invalid_argument("evolve: initial block does not match the network");
  }

  if (substeps <= 0) substeps = default_substeps(config, samples);
  substeps = round_to_segments(substeps, samples - 1);
  const int per_segment = substeps / (samples - 1);
  const double dt = config.t_max / substeps;
  const auto coeff = cf4();

  const BlockOperators ops(config, block);
  const int dim = block.size();
  const int sites = config.site_count();

  Eigen::MatrixXd site_m(dim, sites);
  for (int i = 0; i < dim; ++i) {
    for (int site = 0; site < sites; ++site) {
      site_m(i, site) = 0.5 * block.state(i).twice_m[static_cast<size_t>(site)];
    }
  }

  Trajectory traj;
  traj.times.resize(static_cast<size_t>(samples));
  traj.populations.resize(samples, dim);
  traj.site_projections.resize(samples, sites);
  traj.norms.resize(static_cast<size_t>(samples));

  Eigen::VectorXcd psi = initial.amplitudes;
  auto record = [&](int sample, double t) {
    traj.times[static_cast<size_t>(sample)] = t;
    const Eigen::VectorXd pops = psi.cwiseAbs2();
    traj.populations.row(sample) = pops;
    traj.site_projections.row(sample) = pops.transpose() * site_m;
    traj.norms[static_cast<size_t>(sample)] = psi.norm();
  };
  record(0, 0.0);

  for (int step = 0; step < substeps; ++step) {
    const double t0 = static_cast<double>(step) * dt;
    const PulseAmplitudes p1 = pulses(std::min(t0 + coeff.node1 * dt, config.t_max), config);
    const PulseAmplitudes p2 = pulses(std::min(t0 + coeff.node2 * dt, config.t_max), config);
    const PulseAmplitudes first{coeff.weight_hi * p1.omega_l + coeff.weight_lo * p2.omega_l,
                                coeff.weight_hi * p1.omega_r + coeff.weight_lo * p2.omega_r};
    const PulseAmplitudes second{coeff.weight_lo * p1.omega_l + coeff.weight_hi * p2.omega_l,
                                 coeff.weight_lo * p1.omega_r + coeff.weight_hi * p2.omega_r};
    // each exponential carries half of the static diagonal
    Eigen::MatrixXd h = ops.real_hamiltonian(first);
    h.diagonal() -= 0.5 * (ops.diag_field() * config.field_b + ops.diag_zz() * config.alpha);
    apply_exponential(h, dt, psi, t0);
    h = ops.real_hamiltonian(second);
    h.diagonal() -= 0.5 * (ops.diag_field() * config.field_b + ops.diag_zz() * config.alpha);
    apply_exponential(h, dt, psi, t0);

    if ((step + 1) % per_segment == 0) {
      const int sample = (step + 1) / per_segment;
      record(sample, static_cast<double>(step + 1) * dt);
    }
  }

  traj.final_state.block = initial.block;
  traj.final_state.amplitudes = psi;
  if (std::abs(psi.norm() - 1.0) > 1e-9) {
    throw std::runtime_error("evolve: norm drift exceeded 1e-9 at t = " +
                             std::to_string(config.t_max));
  }
  return traj;
}

// ---- full product space -----------------------------------------------------

namespace {

// pieces of the full-space Hamiltonian with the Zeeman term split off
struct FullOperators {
  Eigen::SparseMatrix<double> coupling_l;
  Eigen::SparseMatrix<double> coupling_r;
  Eigen::VectorXd diag_zz;
  Eigen::VectorXd total_m;
};

FullOperators build_full_operators(const NetworkConfig& config) {
  const long dim = full_dimension(config);
  const SpinMagnitude spin = config.spin;
  const int sites = config.site_count();

  FullOperators ops;
  ops.diag_zz.resize(dim);
  ops.total_m.resize(dim);
  std::vector<Eigen::Triplet<double>> tl, tr;

  for (long i = 0; i < dim; ++i) {
    const BasisState state = full_state(config, i);
    double total_m = 0.0;
    for (int site = 0; site < sites; ++site) total_m += 0.5 * state.twice_m[site];
    const double m_l = 0.5 * state.twice_m[0];
    const double m_m = 0.5 * state.twice_m[1];
    double zz = m_l * m_m;
    for (int leaf = 2; leaf < sites; ++leaf) zz += m_m * 0.5 * state.twice_m[leaf];
    ops.total_m[i] = total_m;
    ops.diag_zz[i] = zz;

    auto add_hop = [&](int from_site, int to_site, std::vector<Eigen::Triplet<double>>& out) {
      const int from_level = spin.level_of(state.twice_m[from_site]);
      const int to_level = spin.level_of(state.twice_m[to_site]);
      if (from_level == 0 || to_level == spin.twice_s) return;
      BasisState moved = state;
      moved.twice_m[from_site] -= 2;
      moved.twice_m[to_site] += 2;
      out.emplace_back(full_index(config, moved), i,
                       spin.raise_amplitude(to_level) * spin.raise_amplitude(from_level - 1));
    };
    add_hop(1, 0, tl);
    add_hop(0, 1, tl);
    for (int leaf = 2; leaf < sites; ++leaf) {
      add_hop(leaf, 1, tr);
      add_hop(1, leaf, tr);
    }
  }

  ops.coupling_l.resize(dim, dim);
  ops.coupling_l.setFromTriplets(tl.begin(), tl.end());
  ops.coupling_r.resize(dim, dim);
  ops.coupling_r.setFromTriplets(tr.begin(), tr.end());
  return ops;
}

struct RotatingFrameHamiltonian {
  Eigen::SparseMatrix<double> coupling;  // omega_l * X_L + omega_r * X_R
  Eigen::VectorXd diag;                  // alpha-weighted ZZ part

  RotatingFrameHamiltonian(const FullOperators& ops, double alpha, double omega_l,
                           double omega_r)
      : coupling(omega_l * ops.coupling_l + omega_r * ops.coupling_r),
        diag(alpha * ops.diag_zz) {}

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const {
    Eigen::VectorXcd out = (coupling * v.real()).cast<Complex>();
    out.noalias() += Complex(0, 1) * (coupling * v.imag()).cast<Complex>();
    out.array() += diag.array().cast<Complex>() * v.array();
    return out;
  }
};

// y = exp(-i tau T) e1 for the Lanczos tridiagonal
Eigen::VectorXcd tridiagonal_exp_column(const std::vector<double>& alphas,
                                        const std::vector<double>& betas, double tau) {
  const int m = static_cast<int>(alphas.size());
  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    tri(j, j) = alphas[static_cast<size_t>(j)];
    if (j + 1 < m) tri(j, j + 1) = tri(j + 1, j) = betas[static_cast<size_t>(j)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
  const Eigen::VectorXcd phases =
      (Complex(0.0, -tau) * solver.eigenvalues().cast<Complex>().array()).exp();
  return solver.eigenvectors() *
         (phases.array() *
          solver.eigenvectors().row(0).transpose().cast<Complex>().array())
             .matrix();
}

// w = exp(-i tau H) v by Lanczos with full reorthogonalization and an
// incremental residual estimate; the step is split in half whenever the
// Krylov space cannot resolve it
Eigen::VectorXcd lanczos_expmv(const RotatingFrameHamiltonian& h, double tau,
                               const Eigen::VectorXcd& v, double t_label, int depth = 0) {
  const double v_norm = v.norm();
  if (v_norm == 0.0) return v;
  if (depth > 30) {
    throw std::runtime_error("evolve_full: step size underflow at t = " +
                             std::to_string(t_label));
  }

  const int dim = static_cast<int>(v.size());
  const int m_max = std::min(dim, 48);
  Eigen::MatrixXcd basis(dim, m_max);
  basis.col(0) = v / v_norm;
  std::vector<double> alphas, betas;
  Eigen::VectorXcd y;

  bool converged = false;
  for (int j = 0; j < m_max; ++j) {
    Eigen::VectorXcd w = h.apply(basis.col(j));
    alphas.push_back(std::real(basis.col(j).dot(w)));
    const auto q = basis.leftCols(j + 1);
    w.noalias() -= q * (q.adjoint() * w).eval();
    w.noalias() -= q * (q.adjoint() * w).eval();  // second pass for safety
    const double b = w.norm();

    if (b < 1e-14) {  // Krylov space exhausted: the result is exact
      y = tridiagonal_exp_column(alphas, betas, tau);
      converged = true;
      break;
    }
    // residual estimate: weight the next basis vector would receive
    y = tridiagonal_exp_column(alphas, betas, tau);
    if (b * std::abs(y[j]) * std::abs(tau) < 1e-12 && j >= 2) {
      converged = true;
      break;
    }
    if (j + 1 == m_max) break;
    betas.push_back(b);
    basis.col(j + 1) = w / b;
  }

  if (!converged) {
    const Eigen::VectorXcd half = lanczos_expmv(h, tau / 2.0, v, t_label, depth + 1);
    return lanczos_expmv(h, tau / 2.0, half, t_label, depth + 1);
  }
  const int m = static_cast<int>(alphas.size());
  return v_norm * (basis.leftCols(m) * y);
}

}  // namespace

double FullTrajectory::max_norm_drift() const {
  double drift = 0.0;
  for (double n : norms) drift = std::max(drift, std::abs(n - 1.0));
  return drift;
}

FullTrajectory evolve_full(const NetworkConfig& config, const Eigen::VectorXcd& initial,
                           int samples, int substeps) {
  config.validate();
  if (samples < 2) throw std::invalid_argument("evolve_full: samples must be >= 2");
  const long dim = full_dimension(config);
  if (initial.size() != dim) {
    throw std::invalid_argument("evolve_full: initial state has wrong dimension");
  }
  if (std::abs(initial.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("evolve_full: initial state is not normalized");
  }

  if (substeps <= 0) {
    const int budget = static_cast<int>(std::ceil(4.0 * config.omega_max * config.t_max));
    substeps = std::max({2 * (samples - 1), 2000, budget});
  }
  substeps = round_to_segments(substeps, samples - 1);
  const int per_segment = substeps / (samples - 1);
  const double dt = config.t_max / substeps;
  const auto coeff = cf4();

  const FullOperators ops = build_full_operators(config);

  FullTrajectory traj;
  traj.times.resize(static_cast<size_t>(samples));
  traj.populations.resize(samples, dim);
  traj.norms.resize(static_cast<size_t>(samples));

  Eigen::VectorXcd psi = initial;
  auto record = [&](int sample, double t) {
    traj.times[static_cast<size_t>(sample)] = t;
    traj.populations.row(sample) = psi.cwiseAbs2();
    traj.norms[static_cast<size_t>(sample)] = psi.norm();
  };
  record(0, 0.0);

  for (int step = 0; step < substeps; ++step) {
    const double t0 = static_cast<double>(step) * dt;
    const PulseAmplitudes p1 = pulses(std::min(t0 + coeff.node1 * dt, config.t_max), config);
    const PulseAmplitudes p2 = pulses(std::min(t0 + coeff.node2 * dt, config.t_max), config);
    const RotatingFrameHamiltonian first(
        ops, 0.5 * config.alpha,
        coeff.weight_hi * p1.omega_l + coeff.weight_lo * p2.omega_l,
        coeff.weight_hi * p1.omega_r + coeff.weight_lo * p2.omega_r);
    const RotatingFrameHamiltonian second(
        ops, 0.5 * config.alpha,
        coeff.weight_lo * p1.omega_l + coeff.weight_hi * p2.omega_l,
        coeff.weight_lo * p1.omega_r + coeff.weight_hi * p2.omega_r);
    psi = lanczos_expmv(first, dt, psi, t0);
    psi = lanczos_expmv(second, dt, psi, t0);

    if ((step + 1) % per_segment == 0) {
      record((step + 1) / per_segment, static_cast<double>(step + 1) * dt);
    }
  }

  // back to the lab frame: the split-off Zeeman term contributes the
  // exact diagonal phase exp(-i B t sum_i m_i)
  const Eigen::VectorXcd zeeman_phase =
      (Complex(0.0, -config.field_b * config.t_max) *
       ops.total_m.cast<Complex>().array())
          .exp();
  traj.final_state = (zeeman_phase.array() * psi.array()).matrix();
  return traj;
}

}  // namespace dsap
