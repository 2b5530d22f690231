#pragma once

// Brute-force reference implementations for tests. Deliberately slow and
// structured differently from the library code so agreement is meaningful.

#include <cmath>
#include <cstdint>
#include <vector>

#include "ecfp/congestion.hpp"
#include "ecfp/rng.hpp"
#include "ecfp/strategy.hpp"
#include "ecfp/tabular_game.hpp"

namespace oracle {

// Poisson-binomial pmf by enumerating all 2^n opponent outcomes.
inline std::vector<double> enumerate_counts(const std::vector<double>& probs) {
  const int n = static_cast<int>(probs.size());
  std::vector<double> pmf(n + 1, 0.0);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    double w = 1.0;
    int count = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1ULL << i)) {
        w *= probs[i];
        ++count;
      } else {
        w *= 1.0 - probs[i];
      }
    }
    pmf[count] += w;
  }
  return pmf;
}

// Expected utility by a plain nested product over every profile.
inline double mixed_utility(const ecfp::TabularGame& game,
                            const ecfp::JointStrategy& p, int player) {
  double total = 0.0;
  game.for_each_profile([&](const ecfp::Profile& y, std::int64_t idx) {
    double w = 1.0;
    for (int i = 0; i < game.num_players(); ++i) w *= p[i][y[i]];
    total += w * game.utility_at(player, idx);
  });
  return total;
}

inline double equilibrium_gap(const ecfp::TabularGame& game,
                              const ecfp::JointStrategy& p) {
  double gap = 0.0;
  for (int i = 0; i < game.num_players(); ++i) {
    const double current = mixed_utility(game, p, i);
    for (int a = 0; a < game.num_actions(); ++a) {
      ecfp::JointStrategy dev = p;
      dev[i] = ecfp::MixedStrategy::pure(game.num_actions(), a);
      gap = std::max(gap, mixed_utility(game, dev, i) - current);
    }
  }
  return gap;
}

inline ecfp::MixedStrategy random_simplex_point(ecfp::Rng& rng, int m) {
  std::vector<double> v(m);
  double s = 0.0;
  for (double& x : v) {
    x = -std::log(1.0 - rng.next_double());
    s += x;
  }
  for (double& x : v) x /= s;
  return ecfp::MixedStrategy::strict(std::move(v));
}

// Identical-interest game over random potential values: the common utility
// is itself an exact potential.
inline ecfp::TabularGame random_potential_game(ecfp::Rng& rng, int players,
                                               int actions) {
  const auto count = ecfp::TabularGame::checked_profile_count(players, actions);
  std::vector<double> u(static_cast<std::size_t>(count));
  for (double& x : u) x = rng.uniform(-1.0, 1.0);
  return ecfp::TabularGame::identical_interest(players, actions, std::move(u));
}

}  // namespace oracle
