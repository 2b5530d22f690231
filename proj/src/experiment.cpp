#include "ecfp/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "ecfp/common.hpp"
#include "ecfp/log.hpp"
#include "ecfp/metrics.hpp"
#include "ecfp/rng.hpp"

namespace ecfp {
namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& context) {
  for (const auto& item : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return item.key() == k;
        }) == allowed.end()) {
      throw ConfigError("unknown key '" + item.key() + "' in " + context);
    }
  }
}

const json& require(const json& j, const char* key, const std::string& context) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ConfigError("missing '" + std::string(key) + "' in " + context);
  }
  return *it;
}

int require_int(const json& j, const char* key, const std::string& context) {
  const json& v = require(j, key, context);
  if (!v.is_number_integer()) {
    throw ConfigError("'" + std::string(key) + "' in " + context +
                      " must be an integer");
  }
  return v.get<int>();
}

std::uint64_t uint_or(const json& j, const char* key, std::uint64_t fallback,
                      const std::string& context) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number_unsigned() && !it->is_number_integer()) {
    throw ConfigError("'" + std::string(key) + "' in " + context +
                      " must be an integer");
  }
  return it->get<std::uint64_t>();
}

double number_or(const json& j, const char* key, double fallback,
                 const std::string& context) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_number()) {
    throw ConfigError("'" + std::string(key) + "' in " + context +
                      " must be a number");
  }
  return it->get<double>();
}

bool bool_or(const json& j, const char* key, bool fallback,
             const std::string& context) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_boolean()) {
    throw ConfigError("'" + std::string(key) + "' in " + context +
                      " must be a boolean");
  }
  return it->get<bool>();
}

std::vector<double> number_array(const json& v, const std::string& context) {
  if (!v.is_array() || v.empty()) {
    throw ConfigError(context + " must be a nonempty array of numbers");
  }
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError(context + " must contain only numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

GameSpec parse_game(const json& j) {
  if (!j.is_object()) throw ConfigError("'game' must be an object");
  GameSpec spec;
  const std::string type = require(j, "type", "game").get<std::string>();
  if (type == "congestion") {
    check_keys(j, {"type", "players", "channels"}, "game");
    spec.kind = GameSpec::Kind::kCongestion;
    spec.players = require_int(j, "players", "game");
    const json& channels = require(j, "channels", "game");
    if (!channels.is_array() || channels.empty()) {
      throw ConfigError("'game.channels' must be a nonempty array");
    }
    for (std::size_t r = 0; r < channels.size(); ++r) {
      spec.channel_coefficients.push_back(
          number_array(channels[r], "game.channels[" + std::to_string(r) + "]"));
    }
  } else if (type == "congestion-random") {
    check_keys(j, {"type", "players", "num_channels", "degree", "cost_seed"},
               "game");
    spec.kind = GameSpec::Kind::kCongestionRandom;
    spec.players = require_int(j, "players", "game");
    spec.num_channels = require_int(j, "num_channels", "game");
    spec.cost_degree = j.contains("degree") ? require_int(j, "degree", "game") : 2;
    spec.cost_seed = uint_or(j, "cost_seed", 0, "game");
  } else if (type == "tabular") {
    check_keys(j, {"type", "players", "actions", "utilities", "common_utility"},
               "game");
    spec.kind = GameSpec::Kind::kTabular;
    spec.players = require_int(j, "players", "game");
    spec.actions = require_int(j, "actions", "game");
    std::int64_t profiles = 0;
    try {
      profiles = TabularGame::checked_profile_count(spec.players, spec.actions);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("bad tabular game shape: ") + e.what());
    }
    if (j.contains("common_utility") == j.contains("utilities")) {
      throw ConfigError(
          "tabular game needs exactly one of 'utilities' or 'common_utility'");
    }
    if (j.contains("common_utility")) {
      std::vector<double> common =
          number_array(j["common_utility"], "game.common_utility");
      if (static_cast<std::int64_t>(common.size()) != profiles) {
        throw ConfigError("'game.common_utility' must have " +
                          std::to_string(profiles) + " entries");
      }
      spec.utilities.assign(spec.players, common);
    } else {
      const json& tables = j["utilities"];
      if (!tables.is_array() ||
          static_cast<int>(tables.size()) != spec.players) {
        throw ConfigError("'game.utilities' must hold one table per player");
      }
      for (int i = 0; i < spec.players; ++i) {
        std::vector<double> table = number_array(
            tables[i], "game.utilities[" + std::to_string(i) + "]");
        if (static_cast<std::int64_t>(table.size()) != profiles) {
          throw ConfigError("each utility table must have " +
                            std::to_string(profiles) + " entries");
        }
        spec.utilities.push_back(std::move(table));
      }
    }
  } else {
    throw ConfigError("unknown game type '" + type + "'");
  }
  if (spec.players < 1) throw ConfigError("'game.players' must be >= 1");
  return spec;
}

GraphSpec parse_graph(const json& j) {
  if (!j.is_object()) throw ConfigError("'graph' must be an object");
  GraphSpec spec;
  const std::string type = require(j, "type", "graph").get<std::string>();
  if (type == "geometric") {
    check_keys(j,
               {"type", "radius", "target_degree", "seed", "max_retries",
                "weights_csv"},
               "graph");
    spec.kind = GraphSpec::Kind::kGeometric;
    spec.radius = number_or(j, "radius", -1.0, "graph");
    spec.target_degree = number_or(j, "target_degree", -1.0, "graph");
    if ((spec.radius > 0) == (spec.target_degree > 0)) {
      throw ConfigError(
          "geometric graph needs exactly one of 'radius' or 'target_degree'");
    }
    spec.seed = uint_or(j, "seed", 0, "graph");
    spec.max_retries =
        j.contains("max_retries") ? require_int(j, "max_retries", "graph") : 100;
  } else if (type == "complete") {
    check_keys(j, {"type", "weights_csv"}, "graph");
    spec.kind = GraphSpec::Kind::kComplete;
  } else if (type == "path") {
    check_keys(j, {"type", "weights_csv"}, "graph");
    spec.kind = GraphSpec::Kind::kPath;
  } else if (type == "edge-list") {
    check_keys(j, {"type", "path", "weights_csv"}, "graph");
    spec.kind = GraphSpec::Kind::kEdgeList;
    spec.path = require(j, "path", "graph").get<std::string>();
  } else {
    throw ConfigError("unknown graph type '" + type + "'");
  }
  if (j.contains("weights_csv")) {
    spec.weights_csv = j["weights_csv"].get<std::string>();
  }
  return spec;
}

PartitionChoice parse_partition(const json& j) {
  if (!j.is_object()) throw ConfigError("'partition' must be an object");
  check_keys(j, {"type", "classes"}, "partition");
  PartitionChoice choice;
  const std::string type = require(j, "type", "partition").get<std::string>();
  if (type == "single") {
    choice.kind = PartitionChoice::Kind::kSingle;
  } else if (type == "singletons") {
    choice.kind = PartitionChoice::Kind::kSingletons;
  } else if (type == "classes") {
    choice.kind = PartitionChoice::Kind::kClasses;
    const json& classes = require(j, "classes", "partition");
    if (!classes.is_array() || classes.empty()) {
      throw ConfigError("'partition.classes' must be a nonempty array");
    }
    for (const auto& cls : classes) {
      if (!cls.is_array()) {
        throw ConfigError("'partition.classes' entries must be arrays");
      }
      std::vector<int> members;
      for (const auto& x : cls) {
        if (!x.is_number_integer()) {
          throw ConfigError("partition members must be integers");
        }
        members.push_back(x.get<int>());
      }
      choice.classes.push_back(std::move(members));
    }
  } else {
    throw ConfigError("unknown partition type '" + type + "'");
  }
  return choice;
}

}  // namespace

ExperimentConfig parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  check_keys(j,
             {"game", "algorithm", "partition", "horizon", "seed", "tie_break",
              "initial_action", "cadence", "parallel", "check_invariants",
              "graph", "solve_cne", "cne"},
             "config");

  ExperimentConfig config;
  config.game = parse_game(require(j, "game", "config"));

  const std::string algo = require(j, "algorithm", "config").get<std::string>();
  if (algo == "fp") {
    config.algorithm = Algorithm::kFp;
  } else if (algo == "ecfp") {
    config.algorithm = Algorithm::kEcfp;
  } else if (algo == "ecfp-generalized") {
    config.algorithm = Algorithm::kEcfpGeneralized;
  } else if (algo == "ecfp-distributed") {
    config.algorithm = Algorithm::kEcfpDistributed;
  } else {
    throw ConfigError("unknown algorithm '" + algo + "'");
  }

  config.horizon = require_int(j, "horizon", "config");
  if (config.horizon < 1) throw ConfigError("'horizon' must be >= 1");
  config.seed = uint_or(j, "seed", 0, "config");

  if (j.contains("tie_break")) {
    const std::string tb = j["tie_break"].get<std::string>();
    if (tb == "lowest-index") {
      config.tie_break = TieBreak::kLowestIndex;
    } else if (tb == "seeded-uniform") {
      config.tie_break = TieBreak::kSeededUniform;
    } else {
      throw ConfigError("unknown tie_break '" + tb + "'");
    }
  }

  if (j.contains("initial_action")) {
    const json& ia = j["initial_action"];
    if (!ia.is_object()) throw ConfigError("'initial_action' must be an object");
    check_keys(ia, {"type", "action"}, "initial_action");
    const std::string type = require(ia, "type", "initial_action").get<std::string>();
    if (type == "fixed") {
      config.initial_action.kind = InitialActionRule::Kind::kFixed;
      config.initial_action.action =
          ia.contains("action") ? require_int(ia, "action", "initial_action") : 0;
    } else if (type == "seeded-uniform") {
      config.initial_action.kind = InitialActionRule::Kind::kSeededUniform;
    } else {
      throw ConfigError("unknown initial_action type '" + type + "'");
    }
  }

  if (j.contains("cadence")) {
    const json& c = j["cadence"];
    if (!c.is_object()) throw ConfigError("'cadence' must be an object");
    check_keys(c, {"dense_until", "stride"}, "cadence");
    config.cadence_dense_until =
        c.contains("dense_until") ? require_int(c, "dense_until", "cadence") : 100;
    config.cadence_stride =
        c.contains("stride") ? require_int(c, "stride", "cadence") : 10;
    if (config.cadence_dense_until < 0 || config.cadence_stride < 1) {
      throw ConfigError("cadence needs dense_until >= 0 and stride >= 1");
    }
  }

  config.parallel = bool_or(j, "parallel", false, "config");
  config.check_invariants = bool_or(j, "check_invariants", false, "config");

  if (j.contains("partition")) config.partition = parse_partition(j["partition"]);
  if (j.contains("graph")) config.graph = parse_graph(j["graph"]);
  if (config.algorithm == Algorithm::kEcfpDistributed &&
      config.graph.kind == GraphSpec::Kind::kNone) {
    throw ConfigError("algorithm 'ecfp-distributed' requires a 'graph'");
  }
  if (config.algorithm == Algorithm::kEcfpGeneralized &&
      config.partition.kind == PartitionChoice::Kind::kDefault) {
    throw ConfigError("algorithm 'ecfp-generalized' requires a 'partition'");
  }
  if (config.algorithm == Algorithm::kEcfp &&
      config.partition.kind == PartitionChoice::Kind::kClasses) {
    throw ConfigError(
        "algorithm 'ecfp' uses a single class; use 'ecfp-generalized' for "
        "custom partitions");
  }

  config.solve_cne_target = bool_or(j, "solve_cne", true, "config");
  if (j.contains("cne")) {
    const json& c = j["cne"];
    if (!c.is_object()) throw ConfigError("'cne' must be an object");
    check_keys(c, {"tol", "max_iters", "gamma0", "decay", "window"}, "cne");
    config.cne.tol = number_or(c, "tol", config.cne.tol, "cne");
    config.cne.max_iters =
        c.contains("max_iters") ? require_int(c, "max_iters", "cne") : config.cne.max_iters;
    config.cne.gamma0 = number_or(c, "gamma0", config.cne.gamma0, "cne");
    config.cne.decay = number_or(c, "decay", config.cne.decay, "cne");
    config.cne.window =
        c.contains("window") ? require_int(c, "window", "cne") : config.cne.window;
    if (config.cne.tol <= 0 || config.cne.max_iters < 1 || config.cne.gamma0 <= 0 ||
        config.cne.gamma0 > 1 || config.cne.decay <= 0 || config.cne.decay >= 1 ||
        config.cne.window < 1) {
      throw ConfigError("bad 'cne' solver settings");
    }
  }
  return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_json(buf.str());
}

Game build_game(const ExperimentConfig& config) {
  const GameSpec& spec = config.game;
  switch (spec.kind) {
    case GameSpec::Kind::kCongestion: {
      std::vector<CostPolynomial> channels;
      channels.reserve(spec.channel_coefficients.size());
      for (const auto& coeff : spec.channel_coefficients) {
        channels.emplace_back(coeff);
      }
      return Game(CongestionGame(spec.players, std::move(channels)));
    }
    case GameSpec::Kind::kCongestionRandom:
      return Game(CongestionGame::random(spec.players, spec.num_channels,
                                         spec.cost_degree, spec.cost_seed));
    case GameSpec::Kind::kTabular:
      return Game(TabularGame(spec.players, spec.actions, spec.utilities));
  }
  throw ConfigError("unreachable game kind");
}

PartitionSpec build_partition(const ExperimentConfig& config) {
  const int n = config.game.players;
  try {
    switch (config.partition.kind) {
      case PartitionChoice::Kind::kSingle:
        return PartitionSpec::single_class(n);
      case PartitionChoice::Kind::kSingletons:
        return PartitionSpec::singletons(n);
      case PartitionChoice::Kind::kClasses:
        return PartitionSpec::from_classes(n, config.partition.classes);
      case PartitionChoice::Kind::kDefault:
        break;
    }
    return config.algorithm == Algorithm::kFp ? PartitionSpec::singletons(n)
                                              : PartitionSpec::single_class(n);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("bad partition: ") + e.what());
  }
}

Graph build_graph(const ExperimentConfig& config) {
  const GraphSpec& spec = config.graph;
  const int n = config.game.players;
  switch (spec.kind) {
    case GraphSpec::Kind::kGeometric:
      if (spec.radius > 0) {
        return geometric_random_graph(n, spec.radius, spec.seed, spec.max_retries);
      }
      return geometric_graph_by_degree(n, spec.target_degree, spec.seed,
                                       spec.max_retries);
    case GraphSpec::Kind::kComplete:
      return complete_graph(n);
    case GraphSpec::Kind::kPath:
      return path_graph(n);
    case GraphSpec::Kind::kEdgeList: {
      Graph g = read_edge_list(spec.path);
      if (g.n != n) {
        throw ConfigError("graph file has " + std::to_string(g.n) +
                          " nodes but the game has " + std::to_string(n) +
                          " players");
      }
      return g;
    }
    case GraphSpec::Kind::kNone:
      break;
  }
  throw ConfigError("no graph configured");
}

WeightMatrix build_weights(const ExperimentConfig& config, const Graph& graph) {
  if (!config.graph.weights_csv.empty()) {
    WeightMatrix w = read_weights_csv(config.graph.weights_csv);
    if (w.size() != graph.n) {
      throw ConfigError("weights file size does not match the graph");
    }
    return w;
  }
  return metropolis_hastings_weights(graph);
}

namespace {

MixedStrategy overall_centroid(const std::vector<MixedStrategy>& q) {
  const int m = q[0].num_actions();
  std::vector<double> mean(m, 0.0);
  for (const auto& qi : q) {
    for (int a = 0; a < m; ++a) mean[a] += qi[a];
  }
  for (double& v : mean) v /= static_cast<double>(q.size());
  return MixedStrategy::strict(std::move(mean));
}

// Deviation gain and per-player utility when all players adopt the centroid.
void centroid_metrics(const Game& game, const MixedStrategy& centroid,
                      double* gap, double* utility) {
  if (game.is_tabular()) {
    const JointStrategy joint(game.num_players(), centroid);
    *gap = equilibrium_gap(game.tabular(), joint);
    double total = 0.0;
    for (int i = 0; i < game.num_players(); ++i) {
      total += mixed_utility(game.tabular(), joint, i);
    }
    *utility = total / game.num_players();
    return;
  }
  const std::vector<double> u = channel_utilities_shared(game.congestion(), centroid);
  double best = u[0];
  double current = 0.0;
  for (int r = 0; r < static_cast<int>(u.size()); ++r) {
    best = std::max(best, u[r]);
    current += centroid[r] * u[r];
  }
  *gap = best - current;
  *utility = current;
}

struct RunContext {
  const ExperimentConfig* config;
  const Game* game;
  const MixedStrategy* cne;  // null when no solved target
  double lambda = 0.0;
  double bound_scale = 1.0;  // max over classes of n/|class|
  std::vector<TrajectoryRecord>* records;
  const RecordCallback* callback;
};

bool record_due(const ExperimentConfig& config, int t) {
  return t <= config.cadence_dense_until || t % config.cadence_stride == 0 ||
         t == config.horizon;
}

void push_record(const RunContext& ctx, const LearnerState& core,
                 double est_err, double bound) {
  TrajectoryRecord rec;
  rec.t = core.t;
  const MixedStrategy centroid = overall_centroid(core.q);
  centroid_metrics(*ctx.game, centroid, &rec.gap, &rec.centroid_utility);
  rec.dist_cne = ctx.cne != nullptr
                     ? normalized_consensus_distance(centroid, *ctx.cne)
                     : std::numeric_limits<double>::quiet_NaN();
  rec.max_est_err = est_err;
  rec.err_bound = bound;
  if (ctx.config->check_invariants) {
    if (rec.gap < -1e-9) {
      throw std::runtime_error("negative deviation gain at t=" +
                               std::to_string(core.t));
    }
    for (const auto& qi : core.q) {
      if (!qi.on_simplex()) {
        throw std::runtime_error("empirical distribution off the simplex at t=" +
                                 std::to_string(core.t));
      }
    }
  }
  if (*ctx.callback) (*ctx.callback)(rec);
  ctx.records->push_back(rec);
}

void check_distributed_invariants(const DistributedState& state,
                                  const PartitionSpec& partition, double est_err,
                                  double bound) {
  if (est_err > bound + 1e-9) {
    throw std::runtime_error(
        "tracking error " + std::to_string(est_err) + " exceeds bound " +
        std::to_string(bound) + " at t=" + std::to_string(state.core.t));
  }
  for (std::size_t k = 0; k < state.estimates.size(); ++k) {
    const Eigen::MatrixXd& est = state.estimates[k];
    for (int a = 0; a < est.cols(); ++a) {
      const double drift =
          std::abs(est.col(a).sum() - state.signals[k].col(a).sum());
      if (drift > 1e-9) {
        throw std::runtime_error("estimate column sums drifted at t=" +
                                 std::to_string(state.core.t));
      }
    }
  }
  if (partition.num_classes() == 1) {
    for (int i = 0; i < static_cast<int>(state.estimates[0].rows()); ++i) {
      if (std::abs(state.estimates[0].row(i).sum() - 1.0) > 1e-9) {
        throw std::runtime_error("estimate row sum drifted at t=" +
                                 std::to_string(state.core.t));
      }
    }
  }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const RecordCallback& callback) {
  const auto start = std::chrono::steady_clock::now();
  const Game game = build_game(config);
  const PartitionSpec partition = build_partition(config);
  const int n = game.num_players();
  const int m = game.num_actions();

  std::vector<int> initial(n, 0);
  if (config.initial_action.kind == InitialActionRule::Kind::kFixed) {
    if (config.initial_action.action < 0 || config.initial_action.action >= m) {
      throw ConfigError("initial action out of range");
    }
    std::fill(initial.begin(), initial.end(), config.initial_action.action);
  } else {
    Rng rng(mix64(config.seed, 0x1a1c));
    for (int& a : initial) a = rng.next_int(m);
  }

  StepOptions options;
  options.tie_break = config.tie_break;
  options.seed = config.seed;
  options.parallel = config.parallel;

  ExperimentResult result;
  result.summary.players = n;
  result.summary.horizon = config.horizon;

  if (!game.is_tabular() && config.solve_cne_target) {
    const CneResult cne = solve_cne(game.congestion(), config.cne);
    result.summary.cne_solved = cne.converged;
    result.summary.cne_residual = cne.residual;
    if (cne.converged) {
      result.cne = cne.strategy;
    } else {
      log_warn("run", "equilibrium solver did not converge; distances reported "
                      "as nan");
    }
  }

  RunContext ctx;
  ctx.config = &config;
  ctx.game = &game;
  ctx.cne = result.cne.has_value() ? &*result.cne : nullptr;
  ctx.records = &result.records;
  ctx.callback = &callback;

  if (config.algorithm == Algorithm::kEcfpDistributed) {
    const Graph graph = build_graph(config);
    const WeightMatrix w = build_weights(config, graph);
    w.validate(&graph);
    ctx.lambda = spectral_contraction(w);
    if (ctx.lambda >= 1.0 - 1e-12) {
      throw std::runtime_error("weight matrix does not mix (lambda >= 1)");
    }
    for (int k = 0; k < partition.num_classes(); ++k) {
      ctx.bound_scale = std::max(
          ctx.bound_scale, static_cast<double>(n) / partition.class_size(k));
    }
    result.summary.distributed = true;
    result.summary.avg_degree = average_degree(graph);
    result.summary.lambda = ctx.lambda;
    result.summary.algorithm = "ecfp-distributed";

    DistributedState state = init_distributed(game, partition, initial, w);
    const double prefactor = 2.0 * std::sqrt(static_cast<double>(n)) /
                             (1.0 - ctx.lambda) * ctx.bound_scale;
    double harmonic = 1.0;
    double bound = prefactor;  // t = 1
    double est_err = max_estimate_error(state);
    if (config.check_invariants) {
      check_distributed_invariants(state, partition, est_err, bound);
    }
    if (record_due(config, 1)) push_record(ctx, state.core, est_err, bound);
    while (state.core.t < config.horizon) {
      step_distributed(state, game, partition, w, options);
      const int t = state.core.t;
      harmonic += 1.0 / t;
      bound = prefactor * (harmonic / t);
      est_err = max_estimate_error(state);
      if (config.check_invariants) {
        check_distributed_invariants(state, partition, est_err, bound);
      }
      if (record_due(config, t)) push_record(ctx, state.core, est_err, bound);
    }
  } else {
    result.summary.algorithm = config.algorithm == Algorithm::kFp ? "fp"
                               : config.algorithm == Algorithm::kEcfp
                                   ? "ecfp"
                                   : "ecfp-generalized";
    LearnerState state = init_centralized(game, partition, initial);
    if (record_due(config, 1)) push_record(ctx, state, 0.0, 0.0);
    while (state.t < config.horizon) {
      if (config.algorithm == Algorithm::kFp) {
        step_fictitious(state, game, options);
      } else {
        step_centralized(state, game, partition, options);
      }
      if (record_due(config, state.t)) push_record(ctx, state, 0.0, 0.0);
    }
  }

  if (!result.records.empty()) {
    const TrajectoryRecord& last = result.records.back();
    result.summary.final_gap = last.gap;
    result.summary.final_dist = last.dist_cne;
    result.summary.final_utility = last.centroid_utility;
  }
  for (const auto& rec : result.records) {
    if (rec.dist_cne <= 0.1) {
      result.summary.steps_to_threshold = rec.t;
      break;
    }
  }
  result.summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::string records_to_csv(const std::vector<TrajectoryRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  char buf[160];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf), "%d,%.12g,%.12g,%.12g,%.12g,%.12g\n", r.t,
                  r.gap, r.dist_cne, r.centroid_utility, r.max_est_err,
                  r.err_bound);
    out += buf;
  }
  return out;
}

void emit_csv(const std::vector<TrajectoryRecord>& records,
              const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << records_to_csv(records);
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::vector<TrajectoryRecord> parse_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::runtime_error("bad CSV header in " + path);
  }
  std::vector<TrajectoryRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    TrajectoryRecord r;
    double t = 0.0;
    double* fields[6] = {&t, &r.gap, &r.dist_cne, &r.centroid_utility,
                         &r.max_est_err, &r.err_bound};
    std::stringstream ss(line);
    std::string cell;
    for (int f = 0; f < 6; ++f) {
      if (!std::getline(ss, cell, ',')) {
        throw std::runtime_error("short CSV row in " + path);
      }
      *fields[f] = std::strtod(cell.c_str(), nullptr);
    }
    r.t = static_cast<int>(t);
    records.push_back(r);
  }
  return records;
}

}  // namespace ecfp
