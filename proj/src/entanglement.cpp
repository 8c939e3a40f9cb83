#include "dsap/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dsap {

ReducedDensityMatrix partial_trace(const StateVector& state, std::vector<int> keep) {
  if (!state.block) throw std::invalid_argument("partial_trace: state has no block");
  const Block& block = *state.block;
  const NetworkConfig& config = block.config();
  const int sites = config.site_count();

  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep list");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw std::invalid_argument("partial_trace: duplicate site in keep list");
  }
  if (keep.front() < 0 || keep.back() >= sites) {
    throw std::invalid_argument("partial_trace: keep site out of range");
  }

  const int d = config.spin.dimension();
  long kept_dim = 1;
  for (size_t i = 0; i < keep.size(); ++i) kept_dim *= d;

  // rho(a,b) = sum_env psi(a,env) conj(psi(b,env)): collect one kept-space
  // vector per environment configuration, then add its outer product
  std::map<std::vector<int>, Eigen::VectorXcd> env_vectors;
  for (int i = 0; i < block.size(); ++i) {
    const BasisState& basis_state = block.state(i);
    std::vector<int> env;
    env.reserve(static_cast<size_t>(sites) - keep.size());
    long kept_index = 0;
    size_t next_keep = 0;
    for (int site = 0; site < sites; ++site) {
      const int level = config.spin.level_of(basis_state.twice_m[static_cast<size_t>(site)]);
      if (next_keep < keep.size() && keep[next_keep] == site) {
        kept_index = kept_index * d + level;
        ++next_keep;
      } else {
        env.push_back(level);
      }
    }
    auto [it, inserted] = env_vectors.try_emplace(std::move(env));
    if (inserted) it->second = Eigen::VectorXcd::Zero(kept_dim);
    it->second[kept_index] += state.amplitudes[i];
  }

  ReducedDensityMatrix reduced;
  reduced.kept_sites = std::move(keep);
  reduced.rho = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
  for (const auto& [env, vec] : env_vectors) {
    reduced.rho.noalias() += vec * vec.adjoint();
  }
  return reduced;
}

double von_neumann_entropy(const ReducedDensityMatrix& reduced) {
  const double trace = reduced.rho.trace().real();
  if (std::abs(trace - 1.0) > 1e-6) {
    throw std::invalid_argument("von_neumann_entropy: trace deviates from 1 by " +
                                std::to_string(std::abs(trace - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(reduced.rho);
  double entropy = 0.0;
  for (int i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = std::clamp(solver.eigenvalues()[i], 0.0, 1.0);
    if (lambda > 0.0) entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

double entanglement_of_formation(const StateVector& state, int leaf_index) {
  const NetworkConfig& config = state.block->config();
  if (leaf_index < 0 || leaf_index >= config.leaf_count) {
    throw std::invalid_argument("entanglement_of_formation: leaf index out of range");
  }
  return von_neumann_entropy(partial_trace(state, {2 + leaf_index}));
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (!a.block || !b.block || !same_block(*a.block, *b.block)) {
    throw std::invalid_argument("fidelity: states live on different blocks");
  }
  return std::norm(a.amplitudes.dot(b.amplitudes));
}

EgalitarianReport egalitarian_check(const StateVector& state) {
  const Block& block = *state.block;
  const NetworkConfig& config = block.config();
  const int sites = config.site_count();
  const int lowest = -config.spin.twice_s;

  double hub_weight = 0.0;
  std::map<std::vector<int>, std::pair<double, int>> groups;  // pattern -> (sum |amp|, count)
  for (int i = 0; i < block.size(); ++i) {
    const BasisState& basis_state = block.state(i);
    const double weight = std::norm(state.amplitudes[i]);
    if (basis_state.twice_m[0] > lowest || basis_state.twice_m[1] > lowest) {
      hub_weight += weight;
      continue;
    }
    std::vector<int> pattern;
    pattern.reserve(static_cast<size_t>(config.leaf_count));
    for (int leaf = 2; leaf < sites; ++leaf) {
      pattern.push_back((basis_state.twice_m[static_cast<size_t>(leaf)] + config.spin.twice_s) / 2);
    }
    std::sort(pattern.begin(), pattern.end(), std::greater<int>());
    auto& [sum, count] = groups[pattern];
    sum += std::abs(state.amplitudes[i]);
    ++count;
  }
  if (hub_weight > 1e-3) {
    throw std::invalid_argument("egalitarian_check: residual L/M excitation " +
                                std::to_string(hub_weight) + " exceeds 1e-3");
  }

  EgalitarianReport report;
  for (const auto& [pattern, acc] : groups) {
    report.rows.push_back({pattern, acc.first / acc.second, acc.second});
  }
  // most even sharing first: ascending sum of squared per-leaf counts
  auto evenness = [](const std::vector<int>& p) {
    return std::inner_product(p.begin(), p.end(), p.begin(), 0);
  };
  std::sort(report.rows.begin(), report.rows.end(),
            [&](const EgalitarianRow& a, const EgalitarianRow& b) {
              return evenness(a.pattern) < evenness(b.pattern);
            });
  for (size_t i = 1; i < report.rows.size(); ++i) {
    if (report.rows[i].mean_abs_amplitude > report.rows[i - 1].mean_abs_amplitude + 1e-12) {
      report.monotone = false;
    }
  }
  return report;
}

}  // namespace dsap
