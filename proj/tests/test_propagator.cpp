#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "dsap/entanglement.hpp"
#include "dsap/propagator.hpp"
#include "dsap/reference_states.hpp"
#include "dsap/spectral.hpp"

using namespace dsap;

namespace {

NetworkConfig make_config(int twice_s, int leaves, double tmax_product = 1000.0) {
  NetworkConfig config;
  config.spin = SpinMagnitude(twice_s);
  config.leaf_count = leaves;
  config.t_max = tmax_product / config.omega_max;
  return config;
}

double population(const Trajectory& traj, const BasisState& state) {
  const int idx = traj.final_state.block->index_of(state);
  return std::norm(traj.final_state.amplitudes[idx]);
}

}  // namespace

TEST_CASE("couplings off freezes every population") {
  NetworkConfig config = make_config(2, 2);
  config.omega_max = 0.0;
  config.t_max = 500.0;
  const StateVector initial = initial_state(config, 2);
  const Trajectory traj = evolve(config, initial, 21, 2000);
  for (int k = 0; k < 21; ++k) {
    for (int i = 0; i < initial.block->size(); ++i) {
      CHECK(traj.populations(k, i) ==
            doctest::Approx(traj.populations(0, i)).epsilon(1e-12));
    }
  }
}

TEST_CASE("spin-1/2 two-leaf transport reaches the balanced pair") {
  const NetworkConfig config = make_config(1, 2);
  const StateVector initial = initial_state(config, 1);
  const Trajectory traj = evolve(config, initial, 51);

  CHECK(population(traj, BasisState{{-1, -1, 1, -1}}) == doctest::Approx(0.5).epsilon(2e-3));
  CHECK(population(traj, BasisState{{-1, -1, -1, 1}}) == doctest::Approx(0.5).epsilon(2e-3));
  CHECK(population(traj, BasisState{{1, -1, -1, -1}}) < 1e-3);
  CHECK(population(traj, BasisState{{-1, 1, -1, -1}}) < 1e-3);

  CHECK(traj.max_norm_drift() < 1e-9);
  CHECK(traj.max_mediator_population() < 1e-3);
}

TEST_CASE("spin-1 double excitation splits 2/3 vs 1/6") {
  const NetworkConfig config = make_config(2, 2);
  const StateVector initial = initial_state(config, 2);
  const Trajectory traj = evolve(config, initial, 51);

  CHECK(population(traj, BasisState{{-2, -2, 0, 0}}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-3));
  CHECK(population(traj, BasisState{{-2, -2, 2, -2}}) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-3));
  CHECK(population(traj, BasisState{{-2, -2, -2, 2}}) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-3));
  CHECK(traj.max_mediator_population() < 1e-3);
}

TEST_CASE("doubling the resolution moves the final state by < 1e-8") {
  const NetworkConfig config = make_config(2, 2);
  const StateVector initial = initial_state(config, 2);
  const int base = default_substeps(config, 51);
  const Trajectory coarse = evolve(config, initial, 51, base);
  const Trajectory fine = evolve(config, initial, 51, 2 * base);
  CHECK((coarse.final_state.amplitudes - fine.final_state.amplitudes).norm() < 1e-8);
}

TEST_CASE("longer ramps converge monotonically onto the dark target") {
  const std::vector<double> budgets{100.0, std::pow(10.0, 2.25), std::pow(10.0, 2.5),
                                    std::pow(10.0, 2.75), 1000.0};
  const ReferenceState target = reference_final_state(SpinMagnitude(1), 2, 1);
  double previous = 1.0;
  for (double budget : budgets) {
    const NetworkConfig config = make_config(1, 2, budget);
    const StateVector initial = initial_state(config, 1);
    const Trajectory traj = evolve(config, initial, 21);
    const double infidelity = 1.0 - fidelity(traj.final_state, target.state);
    CHECK(infidelity <= previous);
    previous = infidelity;
  }
  CHECK(previous < 1e-2);
}

TEST_CASE("block and full-space evolutions agree") {
  const NetworkConfig config = make_config(1, 2);
  const StateVector initial = initial_state(config, 1);
  const Trajectory block_traj = evolve(config, initial, 21);
  const FullTrajectory full_traj = evolve_full(config, embed_in_full(initial), 21);

  const Eigen::VectorXcd embedded = embed_in_full(block_traj.final_state);
  const double overlap = std::abs(embedded.dot(full_traj.final_state));
  CHECK(1.0 - overlap * overlap < 1e-8);
  CHECK(full_traj.max_norm_drift() < 1e-9);
}

TEST_CASE("the vacuum is stationary up to a global phase") {
  const NetworkConfig config = make_config(1, 2, 200.0);
  Eigen::VectorXcd vacuum = Eigen::VectorXcd::Zero(full_dimension(config));
  vacuum[0] = 1.0;  // all sites in the lowest projection
  const FullTrajectory traj = evolve_full(config, vacuum, 11, 2000);
  CHECK(std::abs(vacuum.dot(traj.final_state)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("spin-flipped initial data evolves to the flipped result") {
  const NetworkConfig config = make_config(2, 2);
  const StateVector initial = initial_state(config, 2);
  const Trajectory normal = evolve(config, initial, 21);

  // mirror sector: every projection negated
  auto flipped_block = enumerate_block(config, config.max_excitations() - 2);
  StateVector flipped_initial{flipped_block,
                              Eigen::VectorXcd::Zero(flipped_block->size())};
  flipped_initial.amplitudes[flipped_block->index_of(BasisState{{-2, 2, 2, 2}})] = 1.0;
  const Trajectory mirrored = evolve(config, flipped_initial, 21);

  StateVector mapped{flipped_block, Eigen::VectorXcd::Zero(flipped_block->size())};
  for (int i = 0; i < normal.final_state.block->size(); ++i) {
    BasisState mirror = normal.final_state.block->state(i);
    for (int& tm : mirror.twice_m) tm = -tm;
    mapped.amplitudes[flipped_block->index_of(mirror)] = normal.final_state.amplitudes[i];
  }
  CHECK(fidelity(mapped, mirrored.final_state) > 1.0 - 1e-8);
}

TEST_CASE("evolve rejects bad input") {
  const NetworkConfig config = make_config(1, 2, 100.0);
  const StateVector initial = initial_state(config, 1);
  CHECK_THROWS_AS(evolve(config, initial, 1), std::invalid_argument);

  StateVector denormalized = initial;
  denormalized.amplitudes *= 1.5;
  CHECK_THROWS_AS(evolve(config, denormalized, 11), std::invalid_argument);

  CHECK_THROWS_AS(evolve_full(config, Eigen::VectorXcd::Zero(3), 11),
                  std::invalid_argument);
}
