#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dsap/network.hpp"

namespace dsap {

struct ReducedDensityMatrix {
  std::vector<int> kept_sites;  // ascending site indices
  Eigen::MatrixXcd rho;         // product basis of kept sites, trace 1
};

// Trace out every site not in `keep`.  Block-restricted amplitudes are
// implicitly embedded in the full product space (absent configurations
// carry amplitude zero).
ReducedDensityMatrix partial_trace(const StateVector& state, std::vector<int> keep);

// -sum lambda log2 lambda with 0 log 0 = 0; eigenvalues are clamped to
// [0, 1] before the log.  Throws if the trace deviates from 1 by > 1e-6.
double von_neumann_entropy(const ReducedDensityMatrix& rho);

// Entropy of one leaf against everything else, in bits.  For final
// states where L and M factor out this is the leaf-versus-leaves
// bipartite entanglement.
double entanglement_of_formation(const StateVector& state, int leaf_index = 0);

// |<a|b>|^2; throws if the states live on different blocks.
double fidelity(const StateVector& a, const StateVector& b);

// ---- egalitarian sharing report ---------------------------------------------

struct EgalitarianRow {
  std::vector<int> pattern;   // per-leaf excitation counts, sorted descending
  double mean_abs_amplitude = 0.0;
  int configurations = 0;
};

struct EgalitarianReport {
  std::vector<EgalitarianRow> rows;  // most even sharing first
  bool monotone = true;              // evener patterns carry >= mean |amplitude|
};

// Groups the support of a leaf-only state by its sharing pattern.
// Throws if residual weight on excited L or M exceeds 1e-3.
EgalitarianReport egalitarian_check(const StateVector& state);

}  // namespace dsap
