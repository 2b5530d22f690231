#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecfp/cne.hpp"
#include "ecfp/consensus.hpp"
#include "ecfp/game.hpp"
#include "ecfp/graph.hpp"
#include "ecfp/learning.hpp"
#include "ecfp/partition.hpp"

namespace ecfp {

// Malformed or inconsistent configuration; the CLI maps this to a usage error.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algorithm { kFp, kEcfp, kEcfpGeneralized, kEcfpDistributed };

struct GameSpec {
  enum class Kind { kCongestion, kCongestionRandom, kTabular } kind;
  int players = 0;
  // congestion
  std::vector<std::vector<double>> channel_coefficients;
  // congestion-random
  int num_channels = 0;
  int cost_degree = 2;
  std::uint64_t cost_seed = 0;
  // tabular
  int actions = 0;
  std::vector<std::vector<double>> utilities;  // one table per player
};

struct GraphSpec {
  enum class Kind { kNone, kGeometric, kComplete, kPath, kEdgeList } kind =
      Kind::kNone;
  double radius = -1.0;
  double target_degree = -1.0;
  std::uint64_t seed = 0;
  int max_retries = 100;
  std::string path;
  std::string weights_csv;  // optional override of the Metropolis-Hastings weights
};

struct PartitionChoice {
  enum class Kind { kDefault, kSingle, kSingletons, kClasses } kind = Kind::kDefault;
  std::vector<std::vector<int>> classes;
};

struct InitialActionRule {
  enum class Kind { kFixed, kSeededUniform } kind = Kind::kFixed;
  int action = 0;
};

struct ExperimentConfig {
  GameSpec game;
  Algorithm algorithm = Algorithm::kEcfp;
  PartitionChoice partition;
  int horizon = 1;
  std::uint64_t seed = 0;
  TieBreak tie_break = TieBreak::kLowestIndex;
  InitialActionRule initial_action;
  int cadence_dense_until = 100;
  int cadence_stride = 10;
  bool parallel = false;
  bool check_invariants = false;
  GraphSpec graph;
  bool solve_cne_target = true;  // congestion only; ignored for tabular games
  CneOptions cne;
};

ExperimentConfig parse_config_json(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

Game build_game(const ExperimentConfig& config);
PartitionSpec build_partition(const ExperimentConfig& config);
Graph build_graph(const ExperimentConfig& config);
WeightMatrix build_weights(const ExperimentConfig& config, const Graph& graph);

struct TrajectoryRecord {
  int t = 0;
  double gap = 0.0;               // deviation gain at the consensus tuple of the centroid
  double dist_cne = 0.0;          // distance of the centroid to the solved equilibrium
  double centroid_utility = 0.0;  // per-player expected utility at the centroid tuple
  double max_est_err = 0.0;       // distributed runs: worst estimate error
  double err_bound = 0.0;         // distributed runs: certified tracking ceiling
};

struct ExperimentSummary {
  int players = 0;
  int horizon = 0;
  std::string algorithm;
  double final_gap = 0.0;
  double final_dist = 0.0;
  double final_utility = 0.0;
  int steps_to_threshold = -1;  // first recorded t with dist_cne <= 0.1
  double avg_degree = 0.0;      // distributed runs only
  double lambda = 0.0;          // distributed runs only
  bool distributed = false;
  bool cne_solved = false;
  double cne_residual = 0.0;
  double wall_seconds = 0.0;
};

struct ExperimentResult {
  std::vector<TrajectoryRecord> records;
  ExperimentSummary summary;
  std::optional<MixedStrategy> cne;
};

using RecordCallback = std::function<void(const TrajectoryRecord&)>;

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const RecordCallback& callback = nullptr);

inline constexpr const char* kCsvHeader =
    "t,gap,dist_cne,centroid_utility,max_est_err,err_bound";

std::string records_to_csv(const std::vector<TrajectoryRecord>& records);
void emit_csv(const std::vector<TrajectoryRecord>& records, const std::string& path);
std::vector<TrajectoryRecord> parse_csv(const std::string& path);

}  // namespace ecfp
