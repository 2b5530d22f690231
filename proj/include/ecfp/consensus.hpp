#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ecfp/graph.hpp"
#include "ecfp/learning.hpp"

namespace ecfp {

// Doubly stochastic mixing matrix over the communication graph.
class WeightMatrix {
 public:
  explicit WeightMatrix(Eigen::MatrixXd w);
  static WeightMatrix uniform(int n);  // every entry 1/n

  int size() const { return static_cast<int>(w_.rows()); }
  const Eigen::MatrixXd& mat() const { return w_; }

  // Throws invalid_argument naming the violated property: nonnegative
  // entries, unit row sums, unit column sums, and (when a graph is given)
  // zeros off the graph's edges and diagonal.
  void validate(const Graph* sparsity = nullptr) const;

 private:
  Eigen::MatrixXd w_;
};

// w_ij = 1/(1+max(deg_i,deg_j)) on edges, diagonal absorbs the slack.
// Symmetric and doubly stochastic; requires a connected graph.
WeightMatrix metropolis_hastings_weights(const Graph& g);

// Operator norm of W on the zero-sum subspace: the largest singular value of
// W - (1/n)*ones. Below 1 exactly when the chain mixes.
double spectral_contraction(const WeightMatrix& w);

// One tracking round: W * (estimates + q_new - q_old). Preserves column sums.
Eigen::MatrixXd consensus_step(const Eigen::MatrixXd& estimates,
                               const Eigen::MatrixXd& q_new,
                               const Eigen::MatrixXd& q_old,
                               const WeightMatrix& w);

// Certified ceiling for the per-column tracking error after t plays:
// (2*sqrt(n)/(1-lambda)) * (H_t/t) with H_t the t-th harmonic number. The
// H_t/t factor is the running average of the signal's per-step increments,
// which the play recursion caps at 1/(tau+1).
double tracking_error_bound(int num_players, double lambda, int t);

void write_weights_csv(const WeightMatrix& w, const std::string& path);
// Reads without validating, so injected faults surface in validate().
WeightMatrix read_weights_csv(const std::string& path);

// Distributed learner: every player tracks each class centroid through one
// consensus exchange per play, never seeing other players' distributions
// directly. The tracked per-class signal is scaled by n/|class| so that its
// network average is exactly the class centroid; a single class makes the
// signal the raw distribution matrix.
struct DistributedState {
  LearnerState core;
  // Per class: n x m, row i = player i's estimate of that class's centroid.
  std::vector<Eigen::MatrixXd> estimates;
  // Per class: n x m scaled signal matrices X(t).
  std::vector<Eigen::MatrixXd> signals;
};

DistributedState init_distributed(const Game& game, const PartitionSpec& partition,
                                  const std::vector<int>& initial_actions,
                                  const WeightMatrix& w);

void step_distributed(DistributedState& state, const Game& game,
                      const PartitionSpec& partition, const WeightMatrix& w,
                      const StepOptions& options);

// max over players and classes of the distance between a player's estimate
// and the exact class centroid.
double max_estimate_error(const DistributedState& state);

}  // namespace ecfp
