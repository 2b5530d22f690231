#pragma once

#include <string>
#include <vector>

#include "ecfp/tabular_game.hpp"

namespace ecfp {

// Disjoint covering grouping of players into classes. Learning rules built on
// class centroids assume the game's potential cannot tell same-class players
// apart; congestion games satisfy that for every partition because costs
// depend only on channel counts.
class PartitionSpec {
 public:
  static PartitionSpec singletons(int num_players);
  static PartitionSpec single_class(int num_players);
  // Validates that classes are nonempty, disjoint, and cover 0..n-1.
  static PartitionSpec from_classes(int num_players,
                                    std::vector<std::vector<int>> classes);

  int num_players() const { return static_cast<int>(class_of_.size()); }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  const std::vector<int>& class_members(int k) const { return classes_[k]; }
  int class_size(int k) const { return static_cast<int>(classes_[k].size()); }
  int class_of(int player) const { return class_of_[player]; }

  std::string describe() const;

 private:
  PartitionSpec(std::vector<std::vector<int>> classes, std::vector<int> class_of)
      : classes_(std::move(classes)), class_of_(std::move(class_of)) {}
  std::vector<std::vector<int>> classes_;  // sorted members per class
  std::vector<int> class_of_;              // player -> class index
};

// True iff swapping the actions of any two same-class players never changes
// the potential value; checked exhaustively over all profiles.
bool check_partition_potential_invariance(const PartitionSpec& partition,
                                          int num_actions,
                                          const std::vector<double>& potential);

}  // namespace ecfp
