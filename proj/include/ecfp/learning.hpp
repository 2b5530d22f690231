#pragma once

#include <cstdint>
#include <vector>

#include "ecfp/game.hpp"
#include "ecfp/partition.hpp"
#include "ecfp/strategy.hpp"

namespace ecfp {

enum class TieBreak { kLowestIndex, kSeededUniform };

struct StepOptions {
  TieBreak tie_break = TieBreak::kLowestIndex;
  std::uint64_t seed = 0;  // stream for seeded tie-breaks
  bool parallel = false;   // evaluate players' best responses in parallel
};

// Assumed opponent strategies for one best-response evaluation. Non-owning:
// the referenced strategies must outlive the profile. When every opponent is
// assumed to play one shared strategy, congestion best responses take the
// binomial path instead of the per-opponent convolution.
class BeliefProfile {
 public:
  static BeliefProfile shared(const MixedStrategy& common, int num_players);
  static BeliefProfile from_individual(const std::vector<MixedStrategy>& q);
  static BeliefProfile from_class_centroids(const std::vector<MixedStrategy>& centroids,
                                            const PartitionSpec& partition);

  int num_players() const { return static_cast<int>(entries_.size()); }
  bool all_same() const { return all_same_; }
  const MixedStrategy& for_opponent(int j) const { return *entries_[j]; }
  const std::vector<const MixedStrategy*>& entries() const { return entries_; }

 private:
  BeliefProfile(std::vector<const MixedStrategy*> entries, bool all_same)
      : entries_(std::move(entries)), all_same_(all_same) {}
  std::vector<const MixedStrategy*> entries_;
  bool all_same_;
};

// Expected utility of every pure action against the assumed opponents.
std::vector<double> response_utilities(const Game& game, int player,
                                       const BeliefProfile& beliefs);

// Index of the utility maximum; exact ties resolved by the rule. The seeded
// rule derives its draw from (seed, stream) so results do not depend on
// evaluation order across players.
int argmax_action(const std::vector<double>& utilities, TieBreak tie_break,
                  std::uint64_t seed, std::uint64_t stream);

int best_response(const Game& game, int player, const BeliefProfile& beliefs,
                  TieBreak tie_break = TieBreak::kLowestIndex,
                  std::uint64_t seed = 0, std::uint64_t stream = 0);

// One running-average step: q + (e_action - q)/(t+1), valid for t >= 1.
MixedStrategy empirical_update(const MixedStrategy& q, int action, int t);

// Per-class means of the players' empirical distributions.
std::vector<MixedStrategy> class_centroids(const std::vector<MixedStrategy>& q,
                                           const PartitionSpec& partition);

// Repeated-play state. t counts completed plays; q holds each player's
// empirical distribution; centroids are the exact per-class means.
struct LearnerState {
  int t = 0;
  std::vector<int> actions;
  std::vector<MixedStrategy> q;
  std::vector<MixedStrategy> centroids;
};

LearnerState init_centralized(const Game& game, const PartitionSpec& partition,
                              const std::vector<int>& initial_actions);

// One play: every player best-responds to the composite class-centroid
// profile (opponent j assumed to play its class's centroid), empirical
// distributions and centroids update, t increments.
void step_centralized(LearnerState& state, const Game& game,
                      const PartitionSpec& partition, const StepOptions& options);

// Classical fictitious play: beliefs are the opponents' own empirical
// distributions instead of class centroids.
void step_fictitious(LearnerState& state, const Game& game,
                     const StepOptions& options);

}  // namespace ecfp
