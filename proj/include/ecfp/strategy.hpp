#pragma once

#include <vector>

namespace ecfp {

// Probability vector over one player's actions. Strict strategies live on the
// simplex (entries >= 0, sum 1 within tolerance). Relaxed ones only require
// the entries to sum to 1; consensus estimates can transiently leave the
// simplex, so per-entry sign is not enforced for them.
class MixedStrategy {
 public:
  MixedStrategy() = default;

  // Validates against the simplex and normalizes the rounding residue away.
  static MixedStrategy strict(std::vector<double> probs);
  // Validates the sum only; entries may be slightly negative.
  static MixedStrategy relaxed(std::vector<double> probs);
  // No validation beyond finiteness. For consensus estimate rows, whose sums
  // only converge to 1 over time in multi-class runs.
  static MixedStrategy unchecked(std::vector<double> probs);
  static MixedStrategy pure(int num_actions, int action);
  static MixedStrategy uniform(int num_actions);

  int num_actions() const { return static_cast<int>(probs_.size()); }
  double operator[](int a) const { return probs_[a]; }
  const std::vector<double>& probs() const { return probs_; }

  bool on_simplex() const;
  // Largest-mass action, lowest index on ties.
  int mode() const;

  double l2_distance(const MixedStrategy& other) const;

 private:
  explicit MixedStrategy(std::vector<double> probs) : probs_(std::move(probs)) {}
  std::vector<double> probs_;
};

using JointStrategy = std::vector<MixedStrategy>;

JointStrategy uniform_joint(int num_players, int num_actions);
JointStrategy pure_joint(const std::vector<int>& actions, int num_actions);

}  // namespace ecfp
