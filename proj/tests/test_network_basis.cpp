#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "dsap/network.hpp"

using namespace dsap;

namespace {

NetworkConfig make_config(int twice_s, int leaves) {
  NetworkConfig config;
  config.spin = SpinMagnitude(twice_s);
  config.leaf_count = leaves;
  return config;
}

// test-side oracle: walk the whole product space and count states per sector
long brute_force_sector_count(int twice_s, int sites, int excitations) {
  const int d = twice_s + 1;
  long dim = 1;
  for (int i = 0; i < sites; ++i) dim *= d;
  long count = 0;
  for (long code = 0; code < dim; ++code) {
    long rest = code;
    int quanta = 0;
    for (int site = 0; site < sites; ++site) {
      quanta += static_cast<int>(rest % d);
      rest /= d;
    }
    if (quanta == excitations) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("block sizes match brute-force enumeration") {
  CHECK(Block::enumerate(make_config(1, 2), 1).size() == 4);
  CHECK(Block::enumerate(make_config(2, 2), 2).size() ==
        brute_force_sector_count(2, 4, 2));
  CHECK(Block::enumerate(make_config(2, 2), 2).size() == 10);
  CHECK(Block::enumerate(make_config(3, 4), 3).size() ==
        brute_force_sector_count(3, 6, 3));
  CHECK(Block::enumerate(make_config(3, 4), 3).size() == 56);
}

TEST_CASE("sectors partition the product space") {
  for (const auto& [twice_s, leaves] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}}) {
    const NetworkConfig config = make_config(twice_s, leaves);
    long total = 0;
    for (int n = 0; n <= config.max_excitations(); ++n) {
      total += Block::enumerate(config, n).size();
    }
    long dim = 1;
    for (int i = 0; i < config.site_count(); ++i) dim *= config.spin.dimension();
    CHECK(total == dim);
  }
}

TEST_CASE("enumeration is lexicographic and deterministic") {
  const NetworkConfig config = make_config(2, 2);
  const Block block = Block::enumerate(config, 2);
  for (int i = 1; i < block.size(); ++i) {
    CHECK(block.state(i - 1).twice_m < block.state(i).twice_m);
  }
  const Block again = Block::enumerate(config, 2);
  CHECK(block.states() == again.states());
}

TEST_CASE("index map round-trips") {
  const Block block = Block::enumerate(make_config(3, 2), 3);
  for (int i = 0; i < block.size(); ++i) {
    CHECK(block.index_of(block.state(i)) == i);
  }
  const BasisState outsider{{3, -3, -3, -1}};  // four quanta, not three
  CHECK_FALSE(block.contains(outsider));
  CHECK_THROWS_AS(block.index_of(outsider), std::out_of_range);
}

TEST_CASE("out-of-range sector is rejected") {
  CHECK_THROWS_AS(Block::enumerate(make_config(1, 2), -1), std::invalid_argument);
  CHECK_THROWS_AS(Block::enumerate(make_config(1, 2), 5), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Block::enumerate(make_config(1, 2), 9),
                       "Block: empty excitation sector N = 9", std::invalid_argument);
}

TEST_CASE("initial states sit on the expected sector") {
  SUBCASE("spin-1/2 excitation on L") {
    const StateVector psi = initial_state(make_config(1, 2), 1);
    CHECK(psi.block->excitations() == 1);
    const int idx = psi.block->index_of(BasisState{{1, -1, -1, -1}});
    CHECK(std::abs(psi.amplitudes[idx] - std::complex<double>(1.0, 0.0)) == 0.0);
    CHECK(psi.norm() == doctest::Approx(1.0));
  }
  SUBCASE("vacuum sector is one-dimensional") {
    const StateVector psi = initial_state(make_config(2, 2), -2);
    CHECK(psi.block->excitations() == 0);
    CHECK(psi.block->size() == 1);
  }
  SUBCASE("spin-3/2 fully raised L") {
    const StateVector psi = initial_state(make_config(3, 2), 3);
    CHECK(psi.block->excitations() == 3);
    const int idx = psi.block->index_of(BasisState{{3, -3, -3, -3}});
    CHECK(std::abs(psi.amplitudes[idx]) == doctest::Approx(1.0));
  }
  SUBCASE("invalid projection") {
    CHECK_THROWS_AS(initial_state(make_config(1, 2), 2), std::invalid_argument);
    CHECK_THROWS_AS(initial_state(make_config(2, 2), 1), std::invalid_argument);
  }
}

TEST_CASE("spin flip maps sector N onto the mirror sector") {
  const NetworkConfig config = make_config(2, 2);
  const Block low = Block::enumerate(config, 2);
  const Block high = Block::enumerate(config, config.max_excitations() - 2);
  REQUIRE(low.size() == high.size());
  std::set<std::vector<int>> seen;
  for (int i = 0; i < low.size(); ++i) {
    BasisState flipped = low.state(i);
    for (int& tm : flipped.twice_m) tm = -tm;
    CHECK(high.contains(flipped));
    seen.insert(flipped.twice_m);
  }
  CHECK(static_cast<int>(seen.size()) == low.size());
}

TEST_CASE("labels follow the projection conventions") {
  // half-integer spin labelled by 2m
  const BasisState half{{1, -1, -1, -1}};
  CHECK(half.label(SpinMagnitude(1)) == "1,-1,-1,-1");
  CHECK(half.ket(SpinMagnitude(1)) == "|11\xcc\x84" "1\xcc\x84" "1\xcc\x84\xe2\x9f\xa9");
  // integer spin labelled by m
  const BasisState one{{2, -2, 0, -2}};
  CHECK(one.label(SpinMagnitude(2)) == "1,-1,0,-1");
  const BasisState threehalf{{3, -3, -1, 1}};
  CHECK(threehalf.label(SpinMagnitude(3)) == "3,-3,-1,1");
  CHECK(one.excitations(SpinMagnitude(2)) == 3);
}

TEST_CASE("config validation") {
  NetworkConfig config = make_config(1, 2);
  config.leaf_count = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = make_config(1, 2);
  config.t_max = 0.0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config = make_config(1, 2);
  config.alpha = -0.1;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}
