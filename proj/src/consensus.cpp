#include "ecfp/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ecfp/common.hpp"

namespace ecfp {

WeightMatrix::WeightMatrix(Eigen::MatrixXd w) : w_(std::move(w)) {
  if (w_.rows() == 0 || w_.rows() != w_.cols()) {
    throw std::invalid_argument("weight matrix must be square and nonempty");
  }
}

WeightMatrix WeightMatrix::uniform(int n) {
  if (n <= 0) throw std::invalid_argument("weight matrix needs n >= 1");
  return WeightMatrix(Eigen::MatrixXd::Constant(n, n, 1.0 / n));
}

void WeightMatrix::validate(const Graph* sparsity) const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(w_(i, j) >= -kWeightTol)) {
        throw std::invalid_argument("weight matrix has a negative entry at (" +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    ")");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(w_.row(i).sum() - 1.0) > kWeightTol) {
      throw std::invalid_argument("weight matrix row " + std::to_string(i) +
                                  " does not sum to 1");
    }
  }
  for (int j = 0; j < n; ++j) {
    if (std::abs(w_.col(j).sum() - 1.0) > kWeightTol) {
      throw std::invalid_argument("weight matrix column " + std::to_string(j) +
                                  " does not sum to 1");
    }
  }
  if (sparsity != nullptr) {
    if (sparsity->n != n) {
      throw std::invalid_argument("weight matrix size does not match graph");
    }
    Eigen::MatrixXd allowed = Eigen::MatrixXd::Identity(n, n);
    for (auto [i, j] : sparsity->edges) allowed(i, j) = allowed(j, i) = 1.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (allowed(i, j) == 0.0 && std::abs(w_(i, j)) > kWeightTol) {
          throw std::invalid_argument(
              "weight matrix has mass off the graph at (" + std::to_string(i) +
              "," + std::to_string(j) + ")");
        }
      }
    }
  }
}

WeightMatrix metropolis_hastings_weights(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument("Metropolis-Hastings weights need a connected graph");
  }
  const std::vector<int> deg = degrees(g);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(g.n, g.n);
  for (auto [i, j] : g.edges) {
    const double v = 1.0 / (1.0 + std::max(deg[i], deg[j]));
    w(i, j) = w(j, i) = v;
  }
  for (int i = 0; i < g.n; ++i) {
    w(i, i) = 1.0 - w.row(i).sum();
  }
  return WeightMatrix(std::move(w));
}

double spectral_contraction(const WeightMatrix& w) {
  const int n = w.size();
  const Eigen::MatrixXd deflated =
      w.mat() - Eigen::MatrixXd::Constant(n, n, 1.0 / n);
  return deflated.bdcSvd().singularValues()(0);
}

Eigen::MatrixXd consensus_step(const Eigen::MatrixXd& estimates,
                               const Eigen::MatrixXd& q_new,
                               const Eigen::MatrixXd& q_old,
                               const WeightMatrix& w) {
  if (estimates.rows() != w.size() || q_new.rows() != estimates.rows() ||
      q_old.rows() != estimates.rows() || q_new.cols() != estimates.cols() ||
      q_old.cols() != estimates.cols()) {
    throw std::invalid_argument("consensus step shape mismatch");
  }
  return w.mat() * (estimates + q_new - q_old);
}

double tracking_error_bound(int num_players, double lambda, int t) {
  if (num_players < 1) throw std::invalid_argument("need at least one player");
  if (t < 1) throw std::invalid_argument("bound defined for t >= 1");
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("bound needs 0 <= lambda < 1");
  }
  double harmonic = 0.0;
  for (int tau = 1; tau <= t; ++tau) harmonic += 1.0 / tau;
  return 2.0 * std::sqrt(static_cast<double>(num_players)) / (1.0 - lambda) *
         (harmonic / t);
}

void write_weights_csv(const WeightMatrix& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  const int n = w.size();
  char buf[40];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", w.mat()(i, j));
      out << buf << (j + 1 < n ? ',' : '\n');
    }
  }
  if (!out) throw std::runtime_error("write failed for " + path);
}

WeightMatrix read_weights_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw std::runtime_error("bad number '" + cell + "' in " + path);
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("empty weight matrix in " + path);
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXd w(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::runtime_error("weight matrix in " + path + " is not square");
    }
    for (int j = 0; j < n; ++j) w(i, j) = rows[i][j];
  }
  return WeightMatrix(std::move(w));
}

namespace {

// Per-class signal whose network average is the class centroid: member rows
// carry (n/|class|) * q_i, others zero.
Eigen::MatrixXd scaled_signal(const std::vector<MixedStrategy>& q,
                              const PartitionSpec& partition, int k) {
  const int n = partition.num_players();
  const int m = q[0].num_actions();
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, m);
  const double scale = static_cast<double>(n) / partition.class_size(k);
  for (int i : partition.class_members(k)) {
    for (int a = 0; a < m; ++a) x(i, a) = scale * q[i][a];
  }
  return x;
}

}  // namespace

DistributedState init_distributed(const Game& game, const PartitionSpec& partition,
                                  const std::vector<int>& initial_actions,
                                  const WeightMatrix& w) {
  if (w.size() != game.num_players()) {
    throw std::invalid_argument("weight matrix size does not match game");
  }
  DistributedState state;
  state.core = init_centralized(game, partition, initial_actions);
  state.signals.reserve(partition.num_classes());
  state.estimates.reserve(partition.num_classes());
  for (int k = 0; k < partition.num_classes(); ++k) {
    state.signals.push_back(scaled_signal(state.core.q, partition, k));
    state.estimates.push_back(w.mat() * state.signals.back());
  }
  return state;
}

void step_distributed(DistributedState& state, const Game& game,
                      const PartitionSpec& partition, const WeightMatrix& w,
                      const StepOptions& options) {
  const int n = game.num_players();
  const int m = game.num_actions();
  const int classes = partition.num_classes();

  // Player i best-responds assuming each opponent plays i's own estimate of
  // that opponent's class centroid.
  std::vector<int> actions(n);
  const auto respond = [&](int i) {
    std::vector<MixedStrategy> assumed;
    assumed.reserve(classes);
    for (int k = 0; k < classes; ++k) {
      std::vector<double> row(m);
      for (int a = 0; a < m; ++a) row[a] = state.estimates[k](i, a);
      assumed.push_back(MixedStrategy::unchecked(std::move(row)));
    }
    const BeliefProfile beliefs =
        BeliefProfile::from_class_centroids(assumed, partition);
    actions[i] = best_response(game, i, beliefs, options.tie_break, options.seed,
                               mix64(state.core.t, i));
  };
#ifdef ECFP_HAVE_OPENMP
  if (options.parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) respond(i);
  } else {
    for (int i = 0; i < n; ++i) respond(i);
  }
#else
  for (int i = 0; i < n; ++i) respond(i);
#endif

  for (int i = 0; i < n; ++i) {
    state.core.q[i] = empirical_update(state.core.q[i], actions[i], state.core.t);
  }
  state.core.actions = std::move(actions);
  state.core.centroids = class_centroids(state.core.q, partition);
  ++state.core.t;

  for (int k = 0; k < classes; ++k) {
    Eigen::MatrixXd next = scaled_signal(state.core.q, partition, k);
    state.estimates[k] =
        consensus_step(state.estimates[k], next, state.signals[k], w);
    state.signals[k] = std::move(next);
  }
}

double max_estimate_error(const DistributedState& state) {
  double worst = 0.0;
  for (std::size_t k = 0; k < state.estimates.size(); ++k) {
    const MixedStrategy& centroid = state.core.centroids[k];
    const int m = centroid.num_actions();
    for (int i = 0; i < state.estimates[k].rows(); ++i) {
      double d2 = 0.0;
      for (int a = 0; a < m; ++a) {
        const double d = state.estimates[k](i, a) - centroid[a];
        d2 += d * d;
      }
      worst = std::max(worst, std::sqrt(d2));
    }
  }
  return worst;
}

}  // namespace ecfp
