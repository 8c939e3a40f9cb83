#pragma once

#include <Eigen/Dense>

namespace dsap {

// Spin magnitude stored as 2s so that half-integer spins stay integral.
// Local levels are indexed 0..2s in ascending projection order, i.e. the
// lowest projection |-s> is level 0.
struct SpinMagnitude {
  int twice_s = 1;

  explicit SpinMagnitude(int twice_s_in);
  SpinMagnitude() = default;

  int dimension() const { return twice_s + 1; }
  double s() const { return 0.5 * twice_s; }

  // projection 2m of local level k (k quanta above the lowest state)
  int twice_m(int level) const { return 2 * level - twice_s; }
  // level holding projection 2m; throws if 2m is not a valid projection
  int level_of(int twice_m_value) const;

  // <m+1|J+|m> for the level holding m, with hbar = 1 and the
  // Condon-Shortley phase (all elements real nonnegative)
  double raise_amplitude(int level) const;

  bool operator==(const SpinMagnitude&) const = default;
};

using LocalOperator = Eigen::MatrixXcd;

LocalOperator jz(const SpinMagnitude& s);
LocalOperator jplus(const SpinMagnitude& s);
LocalOperator jminus(const SpinMagnitude& s);

}  // namespace dsap
