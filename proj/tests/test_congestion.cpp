#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "ecfp/common.hpp"
#include "ecfp/metrics.hpp"
#include "ecfp/partition.hpp"

using namespace ecfp;

TEST_CASE("cost polynomial evaluation") {
  const CostPolynomial c({1.0, 2.0, 0.5});  // 1 + 2k + 0.5k^2
  CHECK(c(0) == doctest::Approx(1.0));
  CHECK(c(2) == doctest::Approx(7.0));
  CHECK_THROWS_AS(CostPolynomial(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("binomial count distribution") {
  const CountDistribution zero = count_distribution_iid(0.0, 5);
  CHECK(zero[0] == 1.0);
  CHECK(zero[5] == 0.0);

  const CountDistribution one = count_distribution_iid(1.0, 5);
  CHECK(one[5] == 1.0);

  const CountDistribution bern = count_distribution_iid(0.3, 1);
  CHECK(bern[0] == doctest::Approx(0.7));
  CHECK(bern[1] == doctest::Approx(0.3));

  const CountDistribution quarter = count_distribution_iid(0.25, 4);
  const auto oracle4 = oracle::enumerate_counts({0.25, 0.25, 0.25, 0.25});
  for (int k = 0; k <= 4; ++k) {
    CHECK(quarter[k] == doctest::Approx(oracle4[k]).epsilon(1e-12));
  }

  CHECK_THROWS_AS(count_distribution_iid(-0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_distribution_iid(1.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_distribution_iid(0.5, -1), std::invalid_argument);
}

TEST_CASE("binomial mean and normalization") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int opponents = 1 + rng.next_int(64);
    const double p = rng.next_double();
    const CountDistribution pmf = count_distribution_iid(p, opponents);
    double mass = 0.0;
    double mean = 0.0;
    for (int k = 0; k <= opponents; ++k) {
      CHECK(pmf[k] >= -1e-12);
      mass += pmf[k];
      mean += k * pmf[k];
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(mean == doctest::Approx(opponents * p).epsilon(1e-9));
  }
}

TEST_CASE("poisson-binomial count distribution") {
  const CountDistribution certain = count_distribution_heterogeneous({1.0, 0.0});
  CHECK(certain[0] == 0.0);
  CHECK(certain[1] == 1.0);
  CHECK(certain[2] == 0.0);

  const std::vector<double> probs = {0.2, 0.5, 0.9};
  const CountDistribution dp = count_distribution_heterogeneous(probs);
  const auto enumerated = oracle::enumerate_counts(probs);
  for (int k = 0; k <= 3; ++k) {
    CHECK(dp[k] == doctest::Approx(enumerated[k]).epsilon(1e-12));
  }

  CHECK_THROWS_AS(count_distribution_heterogeneous({0.5, 1.5}),
                  std::invalid_argument);
}

TEST_CASE("poisson-binomial collapses to binomial on equal entries") {
  Rng rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const int opponents = 1 + rng.next_int(64);
    const double p = rng.next_double();
    const CountDistribution binom = count_distribution_iid(p, opponents);
    const CountDistribution dp =
        count_distribution_heterogeneous(std::vector<double>(opponents, p));
    for (int k = 0; k <= opponents; ++k) {
      CHECK(std::abs(binom[k] - dp[k]) <= 1e-12);
    }
  }
}

TEST_CASE("expected channel utility") {
  const CongestionGame constant(4, {CostPolynomial({3.0})});
  const CountDistribution counts = count_distribution_iid(0.4, 3);
  CHECK(expected_channel_utility(constant, 0, counts) == doctest::Approx(-3.0));

  // c(k) = k, one opponent at p = 0.5: expected cost (1 + 2)/2.
  const CongestionGame linear(2, {CostPolynomial({0.0, 1.0})});
  CHECK(expected_channel_utility(linear, 0, count_distribution_iid(0.5, 1)) ==
        doctest::Approx(-1.5));

  CHECK_THROWS_AS(expected_channel_utility(linear, 1, counts),
                  std::invalid_argument);
  CHECK_THROWS_AS(expected_channel_utility(linear, 0, counts),
                  std::invalid_argument);
}

TEST_CASE("pure utility and potential") {
  const CongestionGame g(
      3, {CostPolynomial({0.0, 1.0}), CostPolynomial({0.0, 2.0, 0.5})});
  CHECK(g.pure_utility({0, 0, 0}, 0) == doctest::Approx(-3.0));
  CHECK(g.pure_utility({0, 1, 1}, 0) == doctest::Approx(-1.0));
  CHECK(g.pure_utility({0, 0, 1}, 1) == doctest::Approx(-2.0));
  // Channel 1 with two users costs 2*2 + 0.5*4.
  CHECK(g.pure_utility({1, 1, 0}, 0) == doctest::Approx(-6.0));

  // Potential sums incremental loads: channel 0 twice, channel 1 once.
  CHECK(g.rosenthal_potential({0, 0, 1}) ==
        doctest::Approx(-(1.0 + 2.0) - 2.5));
  const CongestionGame solo(1, {CostPolynomial({0.0, 4.0})});
  CHECK(solo.rosenthal_potential({0}) == doctest::Approx(solo.pure_utility({0}, 0)));

  CHECK_THROWS_AS(g.pure_utility({0, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.pure_utility({0, 0, 2}, 0), std::invalid_argument);
}

TEST_CASE("tabular expansion") {
  const CongestionGame g(2, {CostPolynomial({0.0, 1.0}), CostPolynomial({0.0, 3.0})});
  const auto [tabular, potential] = g.to_tabular();
  REQUIRE(tabular.num_profiles() == 4);
  // Profiles packed with player 0 least significant: (0,0),(1,0),(0,1),(1,1).
  CHECK(tabular.utility(0, {0, 0}) == doctest::Approx(-2.0));
  CHECK(tabular.utility(0, {1, 0}) == doctest::Approx(-3.0));
  CHECK(tabular.utility(1, {1, 0}) == doctest::Approx(-1.0));
  CHECK(tabular.utility(1, {1, 1}) == doctest::Approx(-6.0));
  CHECK_FALSE(tabular.is_identical_interest());

  CHECK(check_exact_potential(tabular, potential));
  CHECK(check_permutation_invariance(tabular));
  CHECK(check_partition_potential_invariance(PartitionSpec::single_class(2), 2,
                                             potential));
}

TEST_CASE("rosenthal potential is exact on random games") {
  Rng rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + rng.next_int(3);
    const int channels = 2 + rng.next_int(2);
    const CongestionGame g =
        CongestionGame::random(n, channels, 2 + rng.next_int(2), rng.next_u64());
    const auto [tabular, potential] = g.to_tabular();
    CHECK(check_exact_potential(tabular, potential));
    CHECK(check_permutation_invariance(tabular));
  }
}

TEST_CASE("channel utilities match brute-force expectation") {
  Rng rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + rng.next_int(3);
    const int channels = 2 + rng.next_int(2);
    const CongestionGame g =
        CongestionGame::random(n, channels, 3, rng.next_u64());
    const auto [tabular, potential] = g.to_tabular();

    const MixedStrategy shared = oracle::random_simplex_point(rng, channels);
    const std::vector<double> fast = channel_utilities_shared(g, shared);
    const std::vector<double> slow =
        action_utilities(tabular, JointStrategy(n, shared), 0);
    for (int r = 0; r < channels; ++r) {
      CHECK(fast[r] == doctest::Approx(slow[r]).epsilon(1e-9));
    }

    JointStrategy individual;
    for (int i = 0; i < n; ++i) {
      individual.push_back(oracle::random_simplex_point(rng, channels));
    }
    std::vector<const MixedStrategy*> ptrs;
    for (const auto& s : individual) ptrs.push_back(&s);
    for (int i = 0; i < n; ++i) {
      const std::vector<double> het = channel_utilities_individual(g, i, ptrs);
      const std::vector<double> ref = action_utilities(tabular, individual, i);
      for (int r = 0; r < channels; ++r) {
        CHECK(het[r] == doctest::Approx(ref[r]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("off-simplex beliefs are clamped") {
  const CongestionGame g(3, {CostPolynomial({0.0, 1.0}), CostPolynomial({0.0, 1.0})});
  const MixedStrategy estimate = MixedStrategy::relaxed({1.05, -0.05});
  const std::vector<double> u = channel_utilities_shared(g, estimate);
  // Clamped to (1, 0): both opponents on channel 0.
  CHECK(u[0] == doctest::Approx(-3.0));
  CHECK(u[1] == doctest::Approx(-1.0));
}

TEST_CASE("random game coefficient ranges") {
  const CongestionGame cubic = CongestionGame::random(10, 6, 3, 99);
  for (int r = 0; r < cubic.num_channels(); ++r) {
    const auto& c = cubic.channel(r).coefficients();
    REQUIRE(c.size() == 4);
    CHECK(c[0] == 0.0);
    CHECK(c[1] >= 0.1);
    CHECK(c[1] <= 1.0);
    CHECK(c[2] >= 0.01);
    CHECK(c[2] <= 0.1);
    CHECK(c[3] >= 0.001);
    CHECK(c[3] <= 0.01);
  }
  const CongestionGame quad = CongestionGame::random(10, 6, 2, 99);
  CHECK(quad.channel(0).coefficients().size() == 3);
  CHECK_THROWS_AS(CongestionGame::random(10, 6, 4, 99), std::invalid_argument);
}
