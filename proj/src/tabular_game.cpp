#include "ecfp/tabular_game.hpp"

#include <stdexcept>
#include <string>

#include "ecfp/common.hpp"

namespace ecfp {

std::int64_t TabularGame::checked_profile_count(int num_players, int num_actions) {
  if (num_players <= 0) throw std::invalid_argument("num_players must be positive");
  if (num_actions <= 0) throw std::invalid_argument("num_actions must be positive");
  std::int64_t count = 1;
  for (int i = 0; i < num_players; ++i) {
    if (count > kEnumerationCap / num_actions) {
      throw CapacityError("profile space exceeds enumeration cap (" +
                          std::to_string(kEnumerationCap) + " terms)");
    }
    count *= num_actions;
  }
  return count;
}

TabularGame::TabularGame(int num_players, int num_actions,
                         std::vector<std::vector<double>> utilities)
    : num_players_(num_players),
      num_actions_(num_actions),
      num_profiles_(checked_profile_count(num_players, num_actions)),
      identical_interest_(true),
      utilities_(std::move(utilities)) {
  if (static_cast<int>(utilities_.size()) != num_players_) {
    throw std::invalid_argument("expected one utility table per player");
  }
  for (const auto& table : utilities_) {
    if (static_cast<std::int64_t>(table.size()) != num_profiles_) {
      throw std::invalid_argument("utility table size mismatch");
    }
  }
  for (int i = 1; i < num_players_ && identical_interest_; ++i) {
    identical_interest_ = utilities_[i] == utilities_[0];
  }
}

TabularGame TabularGame::from_function(
    int num_players, int num_actions,
    const std::function<double(int, const Profile&)>& u) {
  const std::int64_t count = checked_profile_count(num_players, num_actions);
  std::vector<std::vector<double>> tables(
      num_players, std::vector<double>(static_cast<std::size_t>(count)));
  Profile y(num_players, 0);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    for (int i = 0; i < num_players; ++i) tables[i][idx] = u(i, y);
    for (int i = 0; i < num_players; ++i) {
      if (++y[i] < num_actions) break;
      y[i] = 0;
    }
  }
  return TabularGame(num_players, num_actions, std::move(tables));
}

TabularGame TabularGame::identical_interest(int num_players, int num_actions,
                                            std::vector<double> common_utility) {
  std::vector<std::vector<double>> tables(num_players, common_utility);
  return TabularGame(num_players, num_actions, std::move(tables));
}

std::int64_t TabularGame::profile_index(const Profile& y) const {
  if (static_cast<int>(y.size()) != num_players_) {
    throw std::invalid_argument("profile size mismatch");
  }
  std::int64_t idx = 0;
  std::int64_t stride = 1;
  for (int i = 0; i < num_players_; ++i) {
    if (y[i] < 0 || y[i] >= num_actions_) {
      throw std::invalid_argument("action out of range in profile");
    }
    idx += y[i] * stride;
    stride *= num_actions_;
  }
  return idx;
}

void TabularGame::for_each_profile(
    const std::function<void(const Profile&, std::int64_t)>& fn) const {
  Profile y(num_players_, 0);
  for (std::int64_t idx = 0; idx < num_profiles_; ++idx) {
    fn(y, idx);
    for (int i = 0; i < num_players_; ++i) {
      if (++y[i] < num_actions_) break;
      y[i] = 0;
    }
  }
}

}  // namespace ecfp
