#include "ecfp/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ecfp/common.hpp"

namespace ecfp {

PartitionSpec PartitionSpec::singletons(int num_players) {
  std::vector<std::vector<int>> classes(num_players);
  for (int i = 0; i < num_players; ++i) classes[i] = {i};
  return from_classes(num_players, std::move(classes));
}

PartitionSpec PartitionSpec::single_class(int num_players) {
  std::vector<int> all(num_players);
  std::iota(all.begin(), all.end(), 0);
  return from_classes(num_players, {std::move(all)});
}

PartitionSpec PartitionSpec::from_classes(int num_players,
                                          std::vector<std::vector<int>> classes) {
  if (num_players <= 0) throw std::invalid_argument("num_players must be positive");
  std::vector<int> class_of(num_players, -1);
  for (int k = 0; k < static_cast<int>(classes.size()); ++k) {
    if (classes[k].empty()) throw std::invalid_argument("partition class is empty");
    std::sort(classes[k].begin(), classes[k].end());
    for (int i : classes[k]) {
      if (i < 0 || i >= num_players) {
        throw std::invalid_argument("partition member out of range");
      }
      if (class_of[i] != -1) {
        throw std::invalid_argument("player " + std::to_string(i) +
                                    " appears in two classes");
      }
      class_of[i] = k;
    }
  }
  for (int i = 0; i < num_players; ++i) {
    if (class_of[i] == -1) {
      throw std::invalid_argument("player " + std::to_string(i) +
                                  " missing from partition");
    }
  }
  return PartitionSpec(std::move(classes), std::move(class_of));
}

std::string PartitionSpec::describe() const {
  if (num_classes() == 1) return "single class of " + std::to_string(num_players());
  if (num_classes() == num_players()) return "singletons";
  return std::to_string(num_classes()) + " classes over " +
         std::to_string(num_players()) + " players";
}

bool check_partition_potential_invariance(const PartitionSpec& partition,
                                          int num_actions,
                                          const std::vector<double>& potential) {
  const int n = partition.num_players();
  const std::int64_t count = TabularGame::checked_profile_count(n, num_actions);
  if (static_cast<std::int64_t>(potential.size()) != count) {
    throw std::invalid_argument("potential table size mismatch");
  }
  std::vector<std::int64_t> stride(n);
  std::int64_t acc = 1;
  for (int i = 0; i < n; ++i) {
    stride[i] = acc;
    acc *= num_actions;
  }
  Profile y(n, 0);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    for (int k = 0; k < partition.num_classes(); ++k) {
      const auto& members = partition.class_members(k);
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          const int i = members[a];
          const int j = members[b];
          if (y[i] == y[j]) continue;
          const std::int64_t swapped =
              idx + (y[j] - y[i]) * stride[i] + (y[i] - y[j]) * stride[j];
          if (potential[swapped] != potential[idx]) return false;
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (++y[i] < num_actions) break;
      y[i] = 0;
    }
  }
  return true;
}

}  // namespace ecfp
