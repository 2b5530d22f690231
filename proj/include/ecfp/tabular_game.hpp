#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ecfp {

// Action profile, one action per player.
using Profile = std::vector<int>;

// Dense normal-form game. Every player has the same number of actions and a
// utility table indexed by the packed profile index. Table size is num_actions
// raised to num_players, so construction refuses games past the enumeration
// cap instead of exhausting memory.
class TabularGame {
 public:
  TabularGame(int num_players, int num_actions,
              std::vector<std::vector<double>> utilities);

  // Builds the tables by evaluating u(i, profile) on every profile.
  static TabularGame from_function(
      int num_players, int num_actions,
      const std::function<double(int, const Profile&)>& u);

  // All players share one table.
  static TabularGame identical_interest(int num_players, int num_actions,
                                        std::vector<double> common_utility);

  int num_players() const { return num_players_; }
  int num_actions() const { return num_actions_; }
  std::int64_t num_profiles() const { return num_profiles_; }
  bool is_identical_interest() const { return identical_interest_; }

  // Packed index: player 0 is the least significant digit.
  std::int64_t profile_index(const Profile& y) const;

  double utility(int player, const Profile& y) const {
    return utilities_[player][profile_index(y)];
  }
  double utility_at(int player, std::int64_t index) const {
    return utilities_[player][index];
  }
  const std::vector<double>& utility_table(int player) const {
    return utilities_[player];
  }

  // Visits every profile in packed-index order.
  void for_each_profile(const std::function<void(const Profile&, std::int64_t)>& fn) const;

  // Number of terms a full profile enumeration touches; throws CapacityError
  // past the cap. Shared with the mixed-utility evaluators.
  static std::int64_t checked_profile_count(int num_players, int num_actions);

 private:
  int num_players_;
  int num_actions_;
  std::int64_t num_profiles_;
  bool identical_interest_;
  std::vector<std::vector<double>> utilities_;
};

}  // namespace ecfp
