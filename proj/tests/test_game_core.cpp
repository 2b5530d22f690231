#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "ecfp/common.hpp"
#include "ecfp/metrics.hpp"
#include "ecfp/strategy.hpp"
#include "ecfp/tabular_game.hpp"

using namespace ecfp;

namespace {

// 2x2 identical-interest coordination game: payoff 1 on the diagonal.
TabularGame identity_game() {
  return TabularGame::identical_interest(2, 2, {1.0, 0.0, 0.0, 1.0});
}

}  // namespace

TEST_CASE("mixed strategy validation") {
  CHECK_THROWS_AS(MixedStrategy::strict({0.5, 0.4}), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy::strict({1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy::strict({}), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy::relaxed({0.6, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy::pure(2, 2), std::invalid_argument);

  const MixedStrategy relaxed = MixedStrategy::relaxed({1.2, -0.2});
  CHECK(relaxed[0] == 1.2);
  CHECK_FALSE(relaxed.on_simplex());

  const MixedStrategy p = MixedStrategy::pure(3, 1);
  CHECK(p[1] == 1.0);
  CHECK(p.mode() == 1);
  CHECK(p.on_simplex());

  const MixedStrategy u = MixedStrategy::uniform(4);
  CHECK(u[3] == doctest::Approx(0.25));

  // Tiny negatives from rounding are snapped to the simplex.
  const MixedStrategy snapped = MixedStrategy::strict({1.0 + 1e-12, -1e-12});
  CHECK(snapped[1] == 0.0);
  CHECK(snapped.on_simplex());
}

TEST_CASE("tabular game indexing and flags") {
  // Player 0 is the least significant digit of the packed index.
  const TabularGame g = TabularGame::from_function(
      3, 2, [](int, const Profile& y) { return 4.0 * y[2] + 2.0 * y[1] + y[0]; });
  CHECK(g.profile_index({1, 0, 0}) == 1);
  CHECK(g.profile_index({0, 1, 0}) == 2);
  CHECK(g.profile_index({1, 1, 1}) == 7);
  CHECK(g.utility(0, {1, 0, 1}) == 5.0);
  CHECK(g.is_identical_interest());

  const TabularGame mixed = TabularGame::from_function(
      2, 2, [](int i, const Profile& y) { return i == 0 ? 1.0 : y[0] * 1.0; });
  CHECK_FALSE(mixed.is_identical_interest());

  CHECK_THROWS_AS(TabularGame::checked_profile_count(30, 3), CapacityError);
  CHECK_THROWS_AS(TabularGame(2, 2, {{1, 2, 3, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(g.profile_index({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(g.profile_index({0, 0, 2}), std::invalid_argument);
}

TEST_CASE("mixed utility basics") {
  const TabularGame constant =
      TabularGame::identical_interest(1, 3, {7.5, 7.5, 7.5});
  CHECK(mixed_utility(constant, {MixedStrategy::uniform(3)}, 0) ==
        doctest::Approx(7.5));

  const TabularGame g = identity_game();
  const JointStrategy pure = {MixedStrategy::pure(2, 1), MixedStrategy::pure(2, 0)};
  CHECK(mixed_utility(g, pure, 0) == doctest::Approx(0.0));
  CHECK(mixed_utility(g, {MixedStrategy::pure(2, 1), MixedStrategy::pure(2, 1)},
                      1) == doctest::Approx(1.0));

  const JointStrategy uniform = {MixedStrategy::uniform(2), MixedStrategy::uniform(2)};
  CHECK(mixed_utility(g, uniform, 0) == doctest::Approx(0.5));

  CHECK_THROWS_AS(mixed_utility(g, {MixedStrategy::uniform(2)}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      mixed_utility(g, {MixedStrategy::uniform(3), MixedStrategy::uniform(3)}, 0),
      std::invalid_argument);
}

TEST_CASE("mixed utility matches the brute-force oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + rng.next_int(4);
    const int m = 2 + rng.next_int(3);
    const auto count = TabularGame::checked_profile_count(n, m);
    std::vector<std::vector<double>> tables(
        n, std::vector<double>(static_cast<std::size_t>(count)));
    for (auto& table : tables) {
      for (double& v : table) v = rng.uniform(-2.0, 2.0);
    }
    const TabularGame g(n, m, std::move(tables));
    JointStrategy p;
    for (int i = 0; i < n; ++i) p.push_back(oracle::random_simplex_point(rng, m));
    for (int i = 0; i < n; ++i) {
      CHECK(mixed_utility(g, p, i) ==
            doctest::Approx(oracle::mixed_utility(g, p, i)).epsilon(1e-10));
    }
    CHECK(equilibrium_gap(g, p) ==
          doctest::Approx(oracle::equilibrium_gap(g, p)).epsilon(1e-10));
  }
}

TEST_CASE("mixed utility is multilinear") {
  Rng rng(12);
  const TabularGame g = oracle::random_potential_game(rng, 3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    JointStrategy p;
    for (int i = 0; i < 3; ++i) p.push_back(oracle::random_simplex_point(rng, 3));
    const MixedStrategy alt = oracle::random_simplex_point(rng, 3);
    const double lambda = rng.next_double();
    JointStrategy blended = p;
    std::vector<double> mix(3);
    for (int a = 0; a < 3; ++a) mix[a] = lambda * p[1][a] + (1 - lambda) * alt[a];
    blended[1] = MixedStrategy::strict(mix);
    JointStrategy swapped = p;
    swapped[1] = alt;
    const double expected = lambda * mixed_utility(g, p, 1) +
                            (1 - lambda) * mixed_utility(g, swapped, 1);
    CHECK(mixed_utility(g, blended, 1) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("equilibrium gap") {
  // Dominant-strategy game: action 1 strictly better for both players.
  const TabularGame dominant = TabularGame::from_function(
      2, 2, [](int i, const Profile& y) { return y[i] == 1 ? 2.0 : 0.0; });
  const JointStrategy ne = {MixedStrategy::pure(2, 1), MixedStrategy::pure(2, 1)};
  CHECK(equilibrium_gap(dominant, ne) == doctest::Approx(0.0));

  // Uniform is the mixed equilibrium of the matching game, so zero gap there;
  // skewing the diagonal makes the pure deviation to action 1 worth 0.25.
  const JointStrategy uniform = {MixedStrategy::uniform(2), MixedStrategy::uniform(2)};
  CHECK(equilibrium_gap(identity_game(), uniform) == doctest::Approx(0.0));
  const TabularGame skewed =
      TabularGame::identical_interest(2, 2, {1.0, 0.0, 0.0, 2.0});
  CHECK(equilibrium_gap(skewed, uniform) == doctest::Approx(0.25));

  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const TabularGame game = oracle::random_potential_game(rng, 3, 2);
    JointStrategy p;
    for (int i = 0; i < 3; ++i) p.push_back(oracle::random_simplex_point(rng, 2));
    CHECK(equilibrium_gap(game, p) >= -1e-12);
  }
}

TEST_CASE("consensus gap") {
  const TabularGame g = identity_game();
  CHECK(consensus_gap(g, MixedStrategy::pure(2, 0)) == doctest::Approx(0.0));
  CHECK(consensus_gap(g, MixedStrategy::uniform(2)) == doctest::Approx(0.0));
  const TabularGame skewed =
      TabularGame::identical_interest(2, 2, {1.0, 0.0, 0.0, 2.0});
  CHECK(consensus_gap(skewed, MixedStrategy::uniform(2)) == doctest::Approx(0.25));

  const TabularGame selfish = TabularGame::from_function(
      2, 2, [](int i, const Profile& y) { return i == 0 ? 1.0 * y[0] : 0.0; });
  CHECK_THROWS_AS(consensus_gap(selfish, MixedStrategy::uniform(2)),
                  std::invalid_argument);
}

TEST_CASE("consensus gap equals the gap at the consensus tuple") {
  // Permutation-invariant identical-interest game: payoff depends only on how
  // many players pick action 1.
  Rng rng(14);
  std::vector<double> by_count = {0.3, -0.8, 1.1, 0.2};
  const TabularGame g = TabularGame::from_function(3, 2, [&](int, const Profile& y) {
    return by_count[y[0] + y[1] + y[2]];
  });
  REQUIRE(check_permutation_invariance(g));
  for (int trial = 0; trial < 100; ++trial) {
    const MixedStrategy f = oracle::random_simplex_point(rng, 2);
    CHECK(consensus_gap(g, f) ==
          doctest::Approx(equilibrium_gap(g, JointStrategy(3, f))).epsilon(1e-9));
  }
}

TEST_CASE("permutation invariance check") {
  const TabularGame one_player = TabularGame::identical_interest(1, 3, {1, 2, 3});
  CHECK(check_permutation_invariance(one_player));

  // Payoffs tied to which player holds which action break the swap identity.
  const TabularGame identity_dependent = TabularGame::from_function(
      2, 2, [](int i, const Profile& y) { return i == 0 && y[1] == 1 ? 1.0 : 0.0; });
  CHECK_FALSE(check_permutation_invariance(identity_dependent));
}

TEST_CASE("exact potential check") {
  Rng rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const TabularGame g = oracle::random_potential_game(rng, 3, 2);
    CHECK(check_exact_potential(g, g.utility_table(0)));

    std::vector<double> broken = g.utility_table(0);
    broken[rng.next_int(static_cast<int>(broken.size()))] += 1.0;
    CHECK_FALSE(check_exact_potential(g, broken));
  }
  const TabularGame g = identity_game();
  CHECK_THROWS_AS(check_exact_potential(g, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("normalized consensus distance") {
  const MixedStrategy a = MixedStrategy::strict({0.6, 0.4});
  const MixedStrategy b = MixedStrategy::strict({0.5, 0.5});
  CHECK(normalized_consensus_distance(a, a) == 0.0);
  CHECK(normalized_consensus_distance(MixedStrategy::pure(2, 0),
                                      MixedStrategy::pure(2, 1)) ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK(normalized_consensus_distance(a, b) == doctest::Approx(0.14142135623731));
  CHECK_THROWS_AS(normalized_consensus_distance(a, MixedStrategy::uniform(3)),
                  std::invalid_argument);
}
