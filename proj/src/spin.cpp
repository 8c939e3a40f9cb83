#include "dsap/spin.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dsap {

SpinMagnitude::SpinMagnitude(int twice_s_in) : twice_s(twice_s_in) {
  if (twice_s < 1) {
    throw std::invalid_argument("SpinMagnitude: 2s must be >= 1, got " +
                                std::to_string(twice_s));
  }
}

int SpinMagnitude::level_of(int twice_m_value) const {
  const int shifted = twice_m_value + twice_s;
  if (shifted < 0 || shifted > 2 * twice_s || shifted % 2 != 0) {
    throw std::invalid_argument("SpinMagnitude: 2m = " + std::to_string(twice_m_value) +
                                " is not a projection of 2s = " + std::to_string(twice_s));
  }
  return shifted / 2;
}

double SpinMagnitude::raise_amplitude(int level) const {
  // sqrt(s(s+1) - m(m+1)) for the transition level -> level + 1
  const double sv = s();
  const double m = 0.5 * twice_m(level);
  return std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
}

LocalOperator jz(const SpinMagnitude& s) {
  const int d = s.dimension();
  LocalOperator op = LocalOperator::Zero(d, d);
  for (int k = 0; k < d; ++k) op(k, k) = 0.5 * s.twice_m(k);
  return op;
}

LocalOperator jplus(const SpinMagnitude& s) {
  const int d = s.dimension();
  LocalOperator op = LocalOperator::Zero(d, d);
  for (int k = 0; k + 1 < d; ++k) op(k + 1, k) = s.raise_amplitude(k);
  return op;
}

LocalOperator jminus(const SpinMagnitude& s) { return jplus(s).adjoint(); }

}  // namespace dsap
