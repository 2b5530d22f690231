#pragma once

#include <utility>
#include <vector>

#include "ecfp/rng.hpp"
#include "ecfp/strategy.hpp"
#include "ecfp/tabular_game.hpp"

namespace ecfp {

// Channel cost as a polynomial in the user count, c(k) = sum_d a_d k^d.
class CostPolynomial {
 public:
  CostPolynomial() = default;
  explicit CostPolynomial(std::vector<double> coefficients);

  double operator()(int load) const;
  const std::vector<double>& coefficients() const { return coefficients_; }

 private:
  std::vector<double> coefficients_;  // a_0 first
};

// n players each pick one channel; a player's utility is the negated cost of
// its channel at the realized user count (self included).
class CongestionGame {
 public:
  CongestionGame(int num_players, std::vector<CostPolynomial> channels);

  // Channels with seeded random coefficients: cubic draws a_3 in [.001,.01],
  // a_2 in [.01,.1], a_1 in [.1,1], a_0 = 0; quadratic drops the cubic term.
  // Increasing costs, so the quadratic family has a unique consensus
  // equilibrium.
  static CongestionGame random(int num_players, int num_channels, int degree,
                               std::uint64_t seed);

  int num_players() const { return num_players_; }
  int num_channels() const { return static_cast<int>(channels_.size()); }
  const CostPolynomial& channel(int r) const { return channels_[r]; }

  double pure_utility(const Profile& profile, int player) const;
  // Rosenthal potential: negated sum over channels of cumulative costs up to
  // the channel load. Exact potential for pure_utility.
  double rosenthal_potential(const Profile& profile) const;

  // Dense expansion for the brute-force oracles, with the potential table.
  std::pair<TabularGame, std::vector<double>> to_tabular() const;

 private:
  int num_players_;
  std::vector<CostPolynomial> channels_;
};

// Distribution of the number of opponents on a channel, pmf over 0..n-1.
using CountDistribution = std::vector<double>;

// Binomial(opponents, prob) pmf via a ratio recurrence anchored at the mode;
// far tails underflow to exact zeros.
CountDistribution count_distribution_iid(double prob, int opponents);

// Poisson-binomial pmf for independent non-identical opponents, by the
// standard O(n^2) convolution.
CountDistribution count_distribution_heterogeneous(const std::vector<double>& probs);

// -sum_k c_channel(k+1) * P(k opponents): expected utility of picking the
// channel when opponent counts follow the given distribution.
double expected_channel_utility(const CongestionGame& game, int channel,
                                const CountDistribution& counts);

// Expected utilities of all channels when every opponent plays `shared`
// (binomial path) or when opponent j plays probs[j] (Poisson-binomial path).
std::vector<double> channel_utilities_shared(const CongestionGame& game,
                                             const MixedStrategy& shared);
std::vector<double> channel_utilities_individual(
    const CongestionGame& game, int player,
    const std::vector<const MixedStrategy*>& all_strategies);

}  // namespace ecfp
