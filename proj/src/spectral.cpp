#include "dsap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dsap {

namespace {

constexpr double kGroupToleranceScale = 1e-10;

double eigenvalue_scale(const Eigen::VectorXd& eigenvalues) {
  return std::max(1.0, eigenvalues.cwiseAbs().maxCoeff());
}

}  // namespace

EigenSnapshot eigen_snapshot(const HermitianMatrix& hamiltonian, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigen_snapshot: eigensolver failed at t = " + std::to_string(t));
  }
  return {t, solver.eigenvalues(), solver.eigenvectors()};
}

double adiabaticity_ratio(const EigenSnapshot& snapshot, const HermitianMatrix& dh_dt,
                          int tracked_index) {
  const int dim = static_cast<int>(snapshot.eigenvalues.size());
  const Eigen::VectorXcd driven = dh_dt * snapshot.eigenvectors.col(tracked_index);
  const double drive_scale = std::max(1e-30, dh_dt.cwiseAbs().maxCoeff());
  const double tracked_energy = snapshot.eigenvalues[tracked_index];

  double worst = 0.0;
  for (int i = 0; i < dim; ++i) {
    if (i == tracked_index) continue;
    const double gap = std::abs(snapshot.eigenvalues[i] - tracked_energy);
    const double numerator = std::abs(snapshot.eigenvectors.col(i).dot(driven));
    if (gap < 1e-12) {
      if (numerator > 1e-12 * drive_scale) {
        return std::numeric_limits<double>::infinity();
      }
      continue;
    }
    worst = std::max(worst, numerator / gap);
  }
  return worst;
}

double DarkStateTrack::max_adiabaticity() const {
  double worst = 0.0;
  for (double r : adiabaticity) worst = std::max(worst, r);
  return worst;
}

DarkStateTrack track_dark_state(const NetworkConfig& config, const StateVector& initial,
                                int samples) {
  config.validate();
  if (samples < 2) throw std::invalid_argument("track_dark_state: samples must be >= 2");
  if (!initial.block) throw std::invalid_argument("track_dark_state: initial state has no block");
  const Block& block = *initial.block;
  const BlockOperators ops(config, block);
  const int dim = block.size();

  {
    const Eigen::VectorXcd v = initial.amplitudes / initial.amplitudes.norm();
    const HermitianMatrix h0 =
        ops.real_hamiltonian(pulses(0.0, config)).cast<std::complex<double>>();
    const std::complex<double> energy = v.dot(h0 * v);
    const double residual = (h0 * v - energy * v).norm();
    if (residual > 1e-6) {
      throw std::invalid_argument(
          "track_dark_state: initial state is not an eigenvector of H(0), residual = " +
          std::to_string(residual));
    }
  }

  DarkStateTrack track;
  track.times.resize(static_cast<size_t>(samples));
  track.tracked_index.resize(static_cast<size_t>(samples));
  track.vectors.resize(static_cast<size_t>(samples));
  track.min_gap.resize(static_cast<size_t>(samples));
  track.adiabaticity.resize(static_cast<size_t>(samples));

  Eigen::VectorXcd current = initial.amplitudes / initial.amplitudes.norm();

  for (int k = 0; k < samples; ++k) {
    const double t = config.t_max * static_cast<double>(k) / (samples - 1);
    const HermitianMatrix h =
        ops.real_hamiltonian(pulses(t, config)).cast<std::complex<double>>();
    const EigenSnapshot snapshot = eigen_snapshot(h, t);

    int best = 0;
    double best_overlap = -1.0;
    for (int i = 0; i < dim; ++i) {
      const double overlap = std::abs(snapshot.eigenvectors.col(i).dot(current));
      if (overlap > best_overlap) {
        best_overlap = overlap;
        best = i;
      }
    }

    // degenerate eigenvalue group around the matched level
    const double tol = kGroupToleranceScale * eigenvalue_scale(snapshot.eigenvalues);
    const double tracked_energy = snapshot.eigenvalues[best];
    std::vector<int> group;
    double nearest_outside = std::numeric_limits<double>::infinity();
    for (int i = 0; i < dim; ++i) {
      const double distance = std::abs(snapshot.eigenvalues[i] - tracked_energy);
      if (distance <= tol) {
        group.push_back(i);
      } else {
        nearest_outside = std::min(nearest_outside, distance);
      }
    }

    Eigen::VectorXcd projected = Eigen::VectorXcd::Zero(dim);
    for (int i : group) {
      projected += snapshot.eigenvectors.col(i).dot(current) * snapshot.eigenvectors.col(i);
    }
    const double overlap = projected.norm();
    track.min_overlap = std::min(track.min_overlap, overlap);
    if (overlap <= 0.5) track.broken = true;
    if (overlap > 1e-12) current = projected / overlap;

    const HermitianMatrix dh =
        ops.real_rate_matrix(pulse_rates(t, config)).cast<std::complex<double>>();
    track.times[static_cast<size_t>(k)] = t;
    track.tracked_index[static_cast<size_t>(k)] = best;
    track.vectors[static_cast<size_t>(k)] = current;
    track.min_gap[static_cast<size_t>(k)] = nearest_outside;
    track.adiabaticity[static_cast<size_t>(k)] = adiabaticity_ratio(snapshot, dh, best);
  }

  return track;
}

}  // namespace dsap
