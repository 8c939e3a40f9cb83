#include "dsap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "dsap/entanglement.hpp"
#include "dsap/hamiltonian.hpp"
#include "dsap/propagator.hpp"

namespace dsap {

bool OracleReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const OracleCheck& c) { return c.passed; });
}

std::string OracleReport::str() const {
  std::ostringstream out;
  out << "oracle[" << scenario << "]\n";
  for (const auto& check : checks) {
    out << "  " << (check.passed ? "pass" : "FAIL") << "  " << check.name
        << "  deviation=" << check.deviation << "  bound=" << check.bound << "\n";
  }
  return out.str();
}

namespace {

void add_check(OracleReport& report, const std::string& name, double deviation,
               double bound) {
  report.checks.push_back({name, deviation, bound, deviation < bound});
}

}  // namespace

OracleReport check_block_vs_full(const NetworkConfig& config, int left_twice_m,
                                 int samples, int substeps) {
  const StateVector initial = initial_state(config, left_twice_m);
  const Block& block = *initial.block;

  const Trajectory block_traj = evolve(config, initial, samples, substeps);
  const FullTrajectory full_traj =
      evolve_full(config, embed_in_full(initial), samples, substeps);

  const Eigen::VectorXcd block_embedded = embed_in_full(block_traj.final_state);
  const double overlap = std::abs(block_embedded.dot(full_traj.final_state));
  const double overlap_deficit = std::max(0.0, 1.0 - overlap * overlap);

  // weight outside the initial excitation sector, maximised over samples
  Eigen::VectorXd outside_mask = Eigen::VectorXd::Ones(full_dimension(config));
  for (int i = 0; i < block.size(); ++i) {
    outside_mask[full_index(config, block.state(i))] = 0.0;
  }
  const double leakage = (full_traj.populations * outside_mask).maxCoeff();

  OracleReport report;
  std::ostringstream id;
  id << "block-vs-full 2s=" << config.spin.twice_s << " n=" << config.leaf_count
     << " N=" << block.excitations();
  report.scenario = id.str();
  add_check(report, "final overlap deficit", overlap_deficit, 1e-8);
  add_check(report, "sector leakage", leakage, 1e-10);
  add_check(report, "block norm drift", block_traj.max_norm_drift(), 1e-9);
  add_check(report, "full norm drift", full_traj.max_norm_drift(), 1e-9);
  return report;
}

OracleReport check_naive_partial_trace(const StateVector& state,
                                       const std::vector<int>& keep) {
  const NetworkConfig& config = state.block->config();
  const long dim = full_dimension(config);
  const int d = config.spin.dimension();
  const int sites = config.site_count();

  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());

  const Eigen::VectorXcd full = embed_in_full(state);
  const Eigen::MatrixXcd outer = full * full.adjoint();

  long kept_dim = 1;
  for (size_t i = 0; i < kept.size(); ++i) kept_dim *= d;

  // naive index-by-index trace over the environment sites
  auto kept_index_of = [&](long full_idx) {
    long out = 0;
    std::vector<int> digits(static_cast<size_t>(sites));
    for (int site = sites - 1; site >= 0; --site) {
      digits[static_cast<size_t>(site)] = static_cast<int>(full_idx % d);
      full_idx /= d;
    }
    for (int site : kept) out = out * d + digits[static_cast<size_t>(site)];
    return out;
  };
  auto env_index_of = [&](long full_idx) {
    long out = 0;
    std::vector<int> digits(static_cast<size_t>(sites));
    for (int site = sites - 1; site >= 0; --site) {
      digits[static_cast<size_t>(site)] = static_cast<int>(full_idx % d);
      full_idx /= d;
    }
    for (int site = 0; site < sites; ++site) {
      if (!std::binary_search(kept.begin(), kept.end(), site)) {
        out = out * d + digits[static_cast<size_t>(site)];
      }
    }
    return out;
  };

  Eigen::MatrixXcd naive = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
  for (long row = 0; row < dim; ++row) {
    for (long col = 0; col < dim; ++col) {
      if (env_index_of(row) != env_index_of(col)) continue;
      naive(kept_index_of(row), kept_index_of(col)) += outer(row, col);
    }
  }

  const ReducedDensityMatrix reduced = partial_trace(state, kept);
  const double deviation = (naive - reduced.rho).cwiseAbs().maxCoeff();
  const double trace_error = std::abs(naive.trace().real() - 1.0);

  OracleReport report;
  report.scenario = "naive-partial-trace";
  add_check(report, "entrywise deviation", deviation, 1e-12);
  add_check(report, "naive trace error", trace_error, 1e-10);
  return report;
}

OracleReport check_counts(const NetworkConfig& config) {
  config.validate();
  const int sites = config.site_count();
  const int d = config.spin.dimension();
  long dim = 1;
  for (int site = 0; site < sites; ++site) {
    dim *= d;
    if (dim > 1000000) {
      throw std::length_error("check_counts: product space too large to enumerate");
    }
  }

  std::vector<long> sector_counts(static_cast<size_t>(config.max_excitations()) + 1, 0);
  std::vector<int> digits(static_cast<size_t>(sites), 0);
  for (long i = 0; i < dim; ++i) {
    int quanta = 0;
    for (int v : digits) quanta += v;
    ++sector_counts[static_cast<size_t>(quanta)];
    for (int site = sites - 1; site >= 0; --site) {
      if (++digits[static_cast<size_t>(site)] < d) break;
      digits[static_cast<size_t>(site)] = 0;
    }
  }

  long worst = 0;
  long total = 0;
  for (int n = 0; n <= config.max_excitations(); ++n) {
    const Block block = Block::enumerate(config, n);
    worst = std::max(worst, std::abs(sector_counts[static_cast<size_t>(n)] -
                                     static_cast<long>(block.size())));
    total += block.size();
  }

  OracleReport report;
  std::ostringstream id;
  id << "sector-counts 2s=" << config.spin.twice_s << " n=" << config.leaf_count;
  report.scenario = id.str();
  add_check(report, "per-sector count mismatch", static_cast<double>(worst), 0.5);
  add_check(report, "total state count mismatch",
            static_cast<double>(std::abs(total - dim)), 0.5);
  return report;
}

double excitation_commutator_residual(const NetworkConfig& config,
                                      const PulseAmplitudes& amps) {
  const SparseHermitian h = assemble_full(config, amps);
  const long dim = h.rows();
  Eigen::VectorXd total_m(dim);
  for (long i = 0; i < dim; ++i) {
    const BasisState state = full_state(config, i);
    double m = 0.0;
    for (int tm : state.twice_m) m += 0.5 * tm;
    total_m[i] = m;
  }
  // [H, Jz_total]_{ij} = H_ij (m_j - m_i) with Jz_total diagonal
  double residual = 0.0;
  for (int col = 0; col < h.outerSize(); ++col) {
    for (SparseHermitian::InnerIterator it(h, col); it; ++it) {
      residual = std::max(residual,
                          std::abs(it.value()) * std::abs(total_m[it.col()] - total_m[it.row()]));
    }
  }
  return residual;
}

StateVector random_block_state(const NetworkConfig& config, int excitations,
                               std::uint64_t seed) {
  auto block = enumerate_block(config, excitations);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(block->size());
  for (int i = 0; i < block->size(); ++i) {
    v[i] = std::complex<double>(gauss(rng), gauss(rng));
  }
  v /= v.norm();
  return {block, std::move(v)};
}

}  // namespace dsap
