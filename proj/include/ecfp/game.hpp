#pragma once

#include <stdexcept>
#include <utility>
#include <variant>

#include "ecfp/congestion.hpp"
#include "ecfp/tabular_game.hpp"

namespace ecfp {

// Either game family the learning loops can drive. Tabular games get
// brute-force expectation; congestion games get the count-distribution
// closed forms, which scale to hundreds of players.
class Game {
 public:
  explicit Game(TabularGame g) : v_(std::move(g)) {}
  explicit Game(CongestionGame g) : v_(std::move(g)) {}

  bool is_tabular() const { return std::holds_alternative<TabularGame>(v_); }

  int num_players() const {
    return is_tabular() ? tabular().num_players() : congestion().num_players();
  }
  // Channel count for congestion games.
  int num_actions() const {
    return is_tabular() ? tabular().num_actions() : congestion().num_channels();
  }

  const TabularGame& tabular() const {
    if (!is_tabular()) throw std::logic_error("not a tabular game");
    return std::get<TabularGame>(v_);
  }
  const CongestionGame& congestion() const {
    if (is_tabular()) throw std::logic_error("not a congestion game");
    return std::get<CongestionGame>(v_);
  }

 private:
  std::variant<TabularGame, CongestionGame> v_;
};

}  // namespace ecfp
