#include "ecfp/learning.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ecfp/metrics.hpp"
#include "ecfp/rng.hpp"

namespace ecfp {

BeliefProfile BeliefProfile::shared(const MixedStrategy& common, int num_players) {
  if (num_players <= 0) throw std::invalid_argument("num_players must be positive");
  return BeliefProfile(std::vector<const MixedStrategy*>(num_players, &common), true);
}

BeliefProfile BeliefProfile::from_individual(const std::vector<MixedStrategy>& q) {
  if (q.empty()) throw std::invalid_argument("empty belief list");
  std::vector<const MixedStrategy*> entries(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) entries[i] = &q[i];
  return BeliefProfile(std::move(entries), q.size() == 1);
}

BeliefProfile BeliefProfile::from_class_centroids(
    const std::vector<MixedStrategy>& centroids, const PartitionSpec& partition) {
  if (static_cast<int>(centroids.size()) != partition.num_classes()) {
    throw std::invalid_argument("need one centroid per class");
  }
  std::vector<const MixedStrategy*> entries(partition.num_players());
  for (int i = 0; i < partition.num_players(); ++i) {
    entries[i] = &centroids[partition.class_of(i)];
  }
  return BeliefProfile(std::move(entries), partition.num_classes() == 1);
}

std::vector<double> response_utilities(const Game& game, int player,
                                       const BeliefProfile& beliefs) {
  if (beliefs.num_players() != game.num_players()) {
    throw std::invalid_argument("belief profile has wrong player count");
  }
  if (player < 0 || player >= game.num_players()) {
    throw std::invalid_argument("player index out of range");
  }
  if (!game.is_tabular()) {
    if (beliefs.all_same()) {
      return channel_utilities_shared(game.congestion(), beliefs.for_opponent(0));
    }
    return channel_utilities_individual(game.congestion(), player, beliefs.entries());
  }
  // The evaluator ignores the player's own slot; fill it with anything valid.
  JointStrategy joint;
  joint.reserve(game.num_players());
  for (int j = 0; j < game.num_players(); ++j) {
    joint.push_back(j == player ? MixedStrategy::uniform(game.num_actions())
                                : beliefs.for_opponent(j));
  }
  return action_utilities(game.tabular(), joint, player);
}

int argmax_action(const std::vector<double>& utilities, TieBreak tie_break,
                  std::uint64_t seed, std::uint64_t stream) {
  if (utilities.empty()) throw std::invalid_argument("empty action set");
  int best = 0;
  for (int a = 1; a < static_cast<int>(utilities.size()); ++a) {
    if (utilities[a] > utilities[best]) best = a;
  }
  if (tie_break == TieBreak::kLowestIndex) return best;
  std::vector<int> tied;
  for (int a = 0; a < static_cast<int>(utilities.size()); ++a) {
    if (utilities[a] == utilities[best]) tied.push_back(a);
  }
  if (tied.size() == 1) return tied[0];
  Rng rng(mix64(seed, stream));
  return tied[rng.next_int(static_cast<int>(tied.size()))];
}

int best_response(const Game& game, int player, const BeliefProfile& beliefs,
                  TieBreak tie_break, std::uint64_t seed, std::uint64_t stream) {
  return argmax_action(response_utilities(game, player, beliefs), tie_break, seed,
                       stream);
}

MixedStrategy empirical_update(const MixedStrategy& q, int action, int t) {
  if (t < 1) throw std::invalid_argument("empirical update needs t >= 1");
  if (action < 0 || action >= q.num_actions()) {
    throw std::invalid_argument("action out of range");
  }
  const double step = 1.0 / (t + 1.0);
  std::vector<double> next(q.num_actions());
  for (int a = 0; a < q.num_actions(); ++a) {
    next[a] = q[a] + step * ((a == action ? 1.0 : 0.0) - q[a]);
  }
  return MixedStrategy::strict(std::move(next));
}

std::vector<MixedStrategy> class_centroids(const std::vector<MixedStrategy>& q,
                                           const PartitionSpec& partition) {
  if (static_cast<int>(q.size()) != partition.num_players()) {
    throw std::invalid_argument("need one distribution per player");
  }
  std::vector<MixedStrategy> centroids;
  centroids.reserve(partition.num_classes());
  const int m = q.empty() ? 0 : q[0].num_actions();
  for (int k = 0; k < partition.num_classes(); ++k) {
    // A one-member class's centroid is the member itself; copying it directly
    // keeps singleton-partition runs bit-identical to plain fictitious play.
    if (partition.class_size(k) == 1) {
      centroids.push_back(q[partition.class_members(k)[0]]);
      continue;
    }
    std::vector<double> mean(m, 0.0);
    for (int i : partition.class_members(k)) {
      if (q[i].num_actions() != m) {
        throw std::invalid_argument("distribution size mismatch");
      }
      for (int a = 0; a < m; ++a) mean[a] += q[i][a];
    }
    const double size = partition.class_size(k);
    for (double& v : mean) v /= size;
    centroids.push_back(MixedStrategy::strict(std::move(mean)));
  }
  return centroids;
}

namespace {

std::vector<int> respond_all(const Game& game,
                             const std::function<BeliefProfile(int)>& beliefs_for,
                             const StepOptions& options, int t) {
  const int n = game.num_players();
  std::vector<int> actions(n);
#ifdef ECFP_HAVE_OPENMP
  if (options.parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      actions[i] = best_response(game, i, beliefs_for(i), options.tie_break,
                                 options.seed, mix64(t, i));
    }
    return actions;
  }
#endif
  for (int i = 0; i < n; ++i) {
    actions[i] = best_response(game, i, beliefs_for(i), options.tie_break,
                               options.seed, mix64(t, i));
  }
  return actions;
}

void apply_actions(LearnerState& state, const PartitionSpec& partition,
                   std::vector<int> actions) {
  for (std::size_t i = 0; i < actions.size(); ++i) {
    state.q[i] = empirical_update(state.q[i], actions[i], state.t);
  }
  state.actions = std::move(actions);
  state.centroids = class_centroids(state.q, partition);
  ++state.t;
}

}  // namespace

LearnerState init_centralized(const Game& game, const PartitionSpec& partition,
                              const std::vector<int>& initial_actions) {
  if (partition.num_players() != game.num_players()) {
    throw std::invalid_argument("partition size does not match game");
  }
  if (static_cast<int>(initial_actions.size()) != game.num_players()) {
    throw std::invalid_argument("need one initial action per player");
  }
  LearnerState state;
  state.t = 1;
  state.actions = initial_actions;
  state.q.reserve(game.num_players());
  for (int a : initial_actions) {
    state.q.push_back(MixedStrategy::pure(game.num_actions(), a));
  }
  state.centroids = class_centroids(state.q, partition);
  return state;
}

void step_centralized(LearnerState& state, const Game& game,
                      const PartitionSpec& partition, const StepOptions& options) {
  const BeliefProfile beliefs =
      BeliefProfile::from_class_centroids(state.centroids, partition);
  apply_actions(state, partition,
                respond_all(
                    game, [&](int) -> BeliefProfile { return beliefs; }, options,
                    state.t));
}

void step_fictitious(LearnerState& state, const Game& game,
                     const StepOptions& options) {
  const BeliefProfile beliefs = BeliefProfile::from_individual(state.q);
  const PartitionSpec partition = PartitionSpec::singletons(game.num_players());
  apply_actions(state, partition,
                respond_all(
                    game, [&](int) -> BeliefProfile { return beliefs; }, options,
                    state.t));
}

}  // namespace ecfp
