#include "ecfp/cne.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "ecfp/common.hpp"
#include "ecfp/log.hpp"

namespace ecfp {
namespace {

double residual_from(const std::vector<double>& utilities,
                     const MixedStrategy& p) {
  double best = utilities[0];
  double current = 0.0;
  for (int r = 0; r < p.num_actions(); ++r) {
    best = std::max(best, utilities[r]);
    current += p[r] * utilities[r];
  }
  return best - current;
}

}  // namespace

double verified_consensus_gap(const CongestionGame& game, const MixedStrategy& p) {
  std::vector<const MixedStrategy*> all(game.num_players(), &p);
  const std::vector<double> u = channel_utilities_individual(game, 0, all);
  return residual_from(u, p);
}

CneResult solve_cne_from(const CongestionGame& game, const MixedStrategy& start,
                         const CneOptions& options) {
  if (start.num_actions() != game.num_channels()) {
    throw std::invalid_argument("start strategy length must match channel count");
  }
  const int m = game.num_channels();
  MixedStrategy p = start;
  MixedStrategy best_p = p;
  double best_res = std::numeric_limits<double>::infinity();
  double gamma = options.gamma0;
  double window_best = std::numeric_limits<double>::infinity();
  double prev_window_best = std::numeric_limits<double>::infinity();
  // The iteration aims below tol so rounding differences between the two
  // evaluation paths cannot fail the verification.
  const double target = 0.5 * options.tol;
  int iters = 0;

  for (; iters < options.max_iters; ++iters) {
    const std::vector<double> u = channel_utilities_shared(game, p);
    const double res = residual_from(u, p);
    if (res < best_res) {
      best_res = res;
      best_p = p;
    }
    if (res <= target) break;
    window_best = std::min(window_best, res);
    if ((iters + 1) % options.window == 0) {
      if (window_best >= prev_window_best) gamma *= options.decay;
      prev_window_best = window_best;
      window_best = std::numeric_limits<double>::infinity();
    }
    int br = 0;
    for (int r = 1; r < m; ++r) {
      if (u[r] > u[br]) br = r;
    }
    std::vector<double> next(m);
    for (int r = 0; r < m; ++r) {
      next[r] = (1.0 - gamma) * p[r] + (r == br ? gamma : 0.0);
    }
    p = MixedStrategy::strict(std::move(next));
  }

  CneResult result;
  result.strategy = best_p;
  result.iters = iters;
  result.residual = verified_consensus_gap(game, best_p);
  result.converged = result.residual <= options.tol;
  if (!result.converged) {
    log_warn("cne", "no equilibrium within tolerance; best residual " +
                        std::to_string(result.residual));
  }
  return result;
}

CneResult solve_cne(const CongestionGame& game, const CneOptions& options) {
  return solve_cne_from(game, MixedStrategy::uniform(game.num_channels()),
                        options);
}

}  // namespace ecfp
