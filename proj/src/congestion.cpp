#include "ecfp/congestion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ecfp/common.hpp"
#include "ecfp/log.hpp"

namespace ecfp {

CostPolynomial::CostPolynomial(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) {
    throw std::invalid_argument("cost polynomial needs at least one coefficient");
  }
  for (double a : coefficients_) {
    if (!std::isfinite(a)) throw std::invalid_argument("cost coefficient not finite");
  }
}

double CostPolynomial::operator()(int load) const {
  double v = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    v = v * load + *it;
  }
  return v;
}

CongestionGame::CongestionGame(int num_players, std::vector<CostPolynomial> channels)
    : num_players_(num_players), channels_(std::move(channels)) {
  if (num_players_ <= 0) throw std::invalid_argument("num_players must be positive");
  if (channels_.empty()) throw std::invalid_argument("need at least one channel");
}

CongestionGame CongestionGame::random(int num_players, int num_channels, int degree,
                                      std::uint64_t seed) {
  if (degree < 1 || degree > 3) {
    throw std::invalid_argument("random cost degree must be 1, 2, or 3");
  }
  // Per-degree coefficient ranges keep higher-order terms from swamping the
  // cost at realistic loads.
  const double lo[4] = {0.0, 0.1, 0.01, 0.001};
  const double hi[4] = {0.0, 1.0, 0.1, 0.01};
  Rng rng(seed);
  std::vector<CostPolynomial> channels;
  channels.reserve(num_channels);
  for (int r = 0; r < num_channels; ++r) {
    std::vector<double> coeff(degree + 1, 0.0);
    for (int d = degree; d >= 1; --d) coeff[d] = rng.uniform(lo[d], hi[d]);
    channels.emplace_back(std::move(coeff));
  }
  return CongestionGame(num_players, std::move(channels));
}

double CongestionGame::pure_utility(const Profile& profile, int player) const {
  if (static_cast<int>(profile.size()) != num_players_) {
    throw std::invalid_argument("profile size mismatch");
  }
  if (player < 0 || player >= num_players_) {
    throw std::invalid_argument("player index out of range");
  }
  const int mine = profile[player];
  int load = 0;
  for (int y : profile) {
    if (y < 0 || y >= num_channels()) {
      throw std::invalid_argument("channel index out of range");
    }
    load += (y == mine);
  }
  return -channels_[mine](load);
}

double CongestionGame::rosenthal_potential(const Profile& profile) const {
  if (static_cast<int>(profile.size()) != num_players_) {
    throw std::invalid_argument("profile size mismatch");
  }
  std::vector<int> load(num_channels(), 0);
  for (int y : profile) {
    if (y < 0 || y >= num_channels()) {
      throw std::invalid_argument("channel index out of range");
    }
    ++load[y];
  }
  double phi = 0.0;
  for (int r = 0; r < num_channels(); ++r) {
    for (int j = 1; j <= load[r]; ++j) phi -= channels_[r](j);
  }
  return phi;
}

std::pair<TabularGame, std::vector<double>> CongestionGame::to_tabular() const {
  TabularGame game = TabularGame::from_function(
      num_players_, num_channels(),
      [this](int player, const Profile& y) { return pure_utility(y, player); });
  std::vector<double> potential(static_cast<std::size_t>(game.num_profiles()));
  game.for_each_profile([&](const Profile& y, std::int64_t idx) {
    potential[idx] = rosenthal_potential(y);
  });
  return {std::move(game), std::move(potential)};
}

CountDistribution count_distribution_iid(double prob, int opponents) {
  if (opponents < 0) throw std::invalid_argument("opponent count must be >= 0");
  if (!(prob >= 0.0 && prob <= 1.0)) {
    throw std::invalid_argument("probability " + std::to_string(prob) +
                                " outside [0,1]");
  }
  CountDistribution pmf(opponents + 1, 0.0);
  if (prob == 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (prob == 1.0) {
    pmf[opponents] = 1.0;
    return pmf;
  }
  // Anchor at the mode in log space, then run the multiplicative recurrence
  // outward. One lgamma anchor instead of one per entry keeps large-n belief
  // evaluations cheap; far-tail underflow to zero is harmless.
  const int N = opponents;
  int mode = static_cast<int>((N + 1) * prob);
  if (mode > N) mode = N;
  const double lp = std::log(prob);
  const double lq = std::log1p(-prob);
  const double log_mode = std::lgamma(N + 1.0) - std::lgamma(mode + 1.0) -
                          std::lgamma(N - mode + 1.0) + mode * lp + (N - mode) * lq;
  pmf[mode] = std::exp(log_mode);
  const double odds = prob / (1.0 - prob);
  for (int k = mode; k < N; ++k) {
    pmf[k + 1] = pmf[k] * odds * (N - k) / (k + 1.0);
  }
  for (int k = mode; k > 0; --k) {
    pmf[k - 1] = pmf[k] / odds * k / (N - k + 1.0);
  }
  return pmf;
}

CountDistribution count_distribution_heterogeneous(const std::vector<double>& probs) {
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("probability " + std::to_string(p) +
                                  " outside [0,1]");
    }
  }
  CountDistribution pmf(probs.size() + 1, 0.0);
  pmf[0] = 1.0;
  int used = 0;
  for (double p : probs) {
    ++used;
    for (int k = used; k >= 1; --k) pmf[k] = pmf[k] * (1.0 - p) + pmf[k - 1] * p;
    pmf[0] *= 1.0 - p;
  }
  return pmf;
}

double expected_channel_utility(const CongestionGame& game, int channel,
                                const CountDistribution& counts) {
  if (channel < 0 || channel >= game.num_channels()) {
    throw std::invalid_argument("channel index out of range");
  }
  if (static_cast<int>(counts.size()) != game.num_players()) {
    throw std::invalid_argument("count distribution length must be the player count");
  }
  const CostPolynomial& cost = game.channel(channel);
  double u = 0.0;
  for (int k = 0; k < static_cast<int>(counts.size()); ++k) {
    u -= cost(k + 1) * counts[k];
  }
  return u;
}

namespace {

// Estimates tracked by consensus can leave [0,1] transiently; the binomial
// and Poisson-binomial formulas need a proper probability.
double clamped_prob(double p, int* clamps) {
  const double c = clamp01(p);
  if (c != p) ++*clamps;
  return c;
}

}  // namespace

std::vector<double> channel_utilities_shared(const CongestionGame& game,
                                             const MixedStrategy& shared) {
  if (shared.num_actions() != game.num_channels()) {
    throw std::invalid_argument("strategy length must match channel count");
  }
  const int opponents = game.num_players() - 1;
  int clamps = 0;
  std::vector<double> out(game.num_channels());
  for (int r = 0; r < game.num_channels(); ++r) {
    const double p = clamped_prob(shared[r], &clamps);
    out[r] = expected_channel_utility(game, r, count_distribution_iid(p, opponents));
  }
  if (clamps > 0) {
    log_debug("congestion", "clamped " + std::to_string(clamps) +
                                " off-simplex belief entries into [0,1]");
  }
  return out;
}

std::vector<double> channel_utilities_individual(
    const CongestionGame& game, int player,
    const std::vector<const MixedStrategy*>& all_strategies) {
  if (static_cast<int>(all_strategies.size()) != game.num_players()) {
    throw std::invalid_argument("need one strategy per player");
  }
  if (player < 0 || player >= game.num_players()) {
    throw std::invalid_argument("player index out of range");
  }
  int clamps = 0;
  std::vector<double> probs(game.num_players() - 1);
  std::vector<double> out(game.num_channels());
  for (int r = 0; r < game.num_channels(); ++r) {
    int k = 0;
    for (int j = 0; j < game.num_players(); ++j) {
      if (j == player) continue;
      const MixedStrategy* s = all_strategies[j];
      if (s == nullptr || s->num_actions() != game.num_channels()) {
        throw std::invalid_argument("missing or mis-sized opponent strategy");
      }
      probs[k++] = clamped_prob((*s)[r], &clamps);
    }
    out[r] =
        expected_channel_utility(game, r, count_distribution_heterogeneous(probs));
  }
  if (clamps > 0) {
    log_debug("congestion", "clamped " + std::to_string(clamps) +
                                " off-simplex belief entries into [0,1]");
  }
  return out;
}

}  // namespace ecfp
