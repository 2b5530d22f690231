#include "ecfp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace ecfp {
namespace {

void check_joint(const TabularGame& game, const JointStrategy& p) {
  if (static_cast<int>(p.size()) != game.num_players()) {
    throw std::invalid_argument("joint strategy has wrong player count");
  }
  for (const auto& s : p) {
    if (s.num_actions() != game.num_actions()) {
      throw std::invalid_argument("strategy action count does not match game");
    }
  }
}

std::vector<std::int64_t> strides(const TabularGame& game) {
  std::vector<std::int64_t> s(game.num_players());
  std::int64_t acc = 1;
  for (int i = 0; i < game.num_players(); ++i) {
    s[i] = acc;
    acc *= game.num_actions();
  }
  return s;
}

}  // namespace

std::vector<double> action_utilities(const TabularGame& game,
                                     const JointStrategy& p, int player) {
  check_joint(game, p);
  if (player < 0 || player >= game.num_players()) {
    throw std::invalid_argument("player index out of range");
  }
  const auto& table = game.utility_table(player);
  const auto stride = strides(game);
  const int n = game.num_players();
  const int m = game.num_actions();
  std::vector<double> out(m, 0.0);

  // Depth-first over opponents, reusing the partial probability product.
  // Exact-zero weights prune whole subtrees without changing the sum.
  std::function<void(int, std::int64_t, double)> visit =
      [&](int k, std::int64_t idx, double w) {
        if (w == 0.0) return;
        if (k < 0) {
          for (int a = 0; a < m; ++a) out[a] += w * table[idx + a * stride[player]];
          return;
        }
        if (k == player) {
          visit(k - 1, idx, w);
          return;
        }
        for (int a = 0; a < m; ++a) visit(k - 1, idx + a * stride[k], w * p[k][a]);
      };
  visit(n - 1, 0, 1.0);
  return out;
}

double mixed_utility(const TabularGame& game, const JointStrategy& p, int player) {
  const std::vector<double> au = action_utilities(game, p, player);
  double u = 0.0;
  for (int a = 0; a < game.num_actions(); ++a) u += p[player][a] * au[a];
  return u;
}

double equilibrium_gap(const TabularGame& game, const JointStrategy& p) {
  double gap = 0.0;
  for (int i = 0; i < game.num_players(); ++i) {
    const std::vector<double> au = action_utilities(game, p, i);
    double current = 0.0;
    for (int a = 0; a < game.num_actions(); ++a) current += p[i][a] * au[a];
    const double best = *std::max_element(au.begin(), au.end());
    gap = std::max(gap, best - current);
  }
  return gap;
}

double consensus_gap(const TabularGame& game, const MixedStrategy& f) {
  if (!game.is_identical_interest()) {
    throw std::invalid_argument("consensus gap requires an identical-interest game");
  }
  return equilibrium_gap(game, JointStrategy(game.num_players(), f));
}

bool check_permutation_invariance(const TabularGame& game) {
  const int n = game.num_players();
  const auto stride = strides(game);
  bool ok = true;
  game.for_each_profile([&](const Profile& y, std::int64_t idx) {
    if (!ok) return;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        if (y[i] == y[j]) continue;
        const std::int64_t swapped =
            idx + (y[j] - y[i]) * stride[i] + (y[i] - y[j]) * stride[j];
        if (game.utility_at(i, swapped) != game.utility_at(j, idx) ||
            game.utility_at(j, swapped) != game.utility_at(i, idx)) {
          ok = false;
        }
        for (int k = 0; k < n && ok; ++k) {
          if (k == i || k == j) continue;
          if (game.utility_at(k, swapped) != game.utility_at(k, idx)) ok = false;
        }
      }
    }
  });
  return ok;
}

bool check_exact_potential(const TabularGame& game,
                           const std::vector<double>& potential, double tol) {
  if (static_cast<std::int64_t>(potential.size()) != game.num_profiles()) {
    throw std::invalid_argument("potential table size does not match game");
  }
  const auto stride = strides(game);
  const int m = game.num_actions();
  bool ok = true;
  game.for_each_profile([&](const Profile& y, std::int64_t idx) {
    if (!ok) return;
    for (int i = 0; i < game.num_players() && ok; ++i) {
      for (int a = 0; a < m; ++a) {
        if (a == y[i]) continue;
        const std::int64_t dev = idx + (a - y[i]) * stride[i];
        const double du = game.utility_at(i, dev) - game.utility_at(i, idx);
        const double dphi = potential[dev] - potential[idx];
        if (std::abs(du - dphi) > tol) {
          ok = false;
          break;
        }
      }
    }
  });
  return ok;
}

double normalized_consensus_distance(const MixedStrategy& f,
                                     const MixedStrategy& target) {
  return f.l2_distance(target);
}

}  // namespace ecfp
