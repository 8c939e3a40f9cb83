#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dsap/spin.hpp"

using namespace dsap;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("jz is the ascending projection diagonal") {
  const LocalOperator half = jz(SpinMagnitude(1));
  CHECK(half.rows() == 2);
  CHECK(half(0, 0).real() == doctest::Approx(-0.5));
  CHECK(half(1, 1).real() == doctest::Approx(0.5));

  const LocalOperator one = jz(SpinMagnitude(2));
  CHECK(one(0, 0).real() == doctest::Approx(-1.0));
  CHECK(one(1, 1).real() == doctest::Approx(0.0));
  CHECK(one(2, 2).real() == doctest::Approx(1.0));

  const LocalOperator threehalf = jz(SpinMagnitude(3));
  CHECK(threehalf(0, 0).real() == doctest::Approx(-1.5));
  CHECK(threehalf(3, 3).real() == doctest::Approx(1.5));
  CHECK(max_abs(threehalf - threehalf.adjoint()) == 0.0);
}

TEST_CASE("jplus ladder elements") {
  CHECK(jplus(SpinMagnitude(1))(1, 0).real() == doctest::Approx(1.0));

  const LocalOperator one = jplus(SpinMagnitude(2));
  CHECK(one(1, 0).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(one(2, 1).real() == doctest::Approx(std::sqrt(2.0)));

  // spin-3/2 carries the extra sqrt(3) endpoint elements
  const LocalOperator threehalf = jplus(SpinMagnitude(3));
  CHECK(threehalf(1, 0).real() == doctest::Approx(std::sqrt(3.0)));
  CHECK(threehalf(2, 1).real() == doctest::Approx(2.0));
  CHECK(threehalf(3, 2).real() == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("jminus is the adjoint of jplus") {
  CHECK(jminus(SpinMagnitude(1))(0, 1).real() == doctest::Approx(1.0));
  for (int twice_s = 1; twice_s <= 6; ++twice_s) {
    const SpinMagnitude s(twice_s);
    CHECK(max_abs(jminus(s) - jplus(s).adjoint()) == 0.0);
  }
}

TEST_CASE("angular momentum algebra holds for 2s in 1..6") {
  for (int twice_s = 1; twice_s <= 6; ++twice_s) {
    const SpinMagnitude s(twice_s);
    const LocalOperator z = jz(s), p = jplus(s), m = jminus(s);
    const LocalOperator id = LocalOperator::Identity(s.dimension(), s.dimension());

    CHECK(max_abs(p * m - m * p - 2.0 * z) < 1e-12);
    CHECK(max_abs(z * p - p * z - p) < 1e-12);
    CHECK(max_abs(z * m - m * z + m) < 1e-12);

    // Casimir: J-J+ + Jz(Jz+1) = s(s+1)
    const double casimir = s.s() * (s.s() + 1.0);
    CHECK(max_abs(m * p + z * (z + id) - casimir * id) < 1e-12);

    for (int i = 0; i < s.dimension(); ++i) {
      for (int j = 0; j < s.dimension(); ++j) {
        CHECK(p(i, j).imag() == 0.0);
        CHECK(p(i, j).real() >= 0.0);
      }
    }
  }
}

TEST_CASE("invalid spin magnitude is rejected") {
  CHECK_THROWS_AS(SpinMagnitude(0), std::invalid_argument);
  CHECK_THROWS_AS(SpinMagnitude(-2), std::invalid_argument);
  CHECK_THROWS_AS(SpinMagnitude(1).level_of(0), std::invalid_argument);
  CHECK_THROWS_AS(SpinMagnitude(2).level_of(3), std::invalid_argument);
}
