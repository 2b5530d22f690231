#include "ecfp/strategy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ecfp/common.hpp"

namespace ecfp {
namespace {

double sum_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

void check_sum(const std::vector<double>& probs) {
  if (probs.empty()) throw std::invalid_argument("strategy has no actions");
  const double s = sum_of(probs);
  if (std::abs(s - 1.0) > kSimplexTol) {
    throw std::invalid_argument("strategy entries sum to " + std::to_string(s) +
                                ", expected 1");
  }
}

}  // namespace

MixedStrategy MixedStrategy::strict(std::vector<double> probs) {
  check_sum(probs);
  for (double p : probs) {
    if (p < -kSimplexTol || !std::isfinite(p)) {
      throw std::invalid_argument("strategy entry " + std::to_string(p) +
                                  " outside the simplex");
    }
  }
  // Snap tiny negatives from rounding and renormalize the residue.
  double s = 0.0;
  for (double& p : probs) {
    if (p < 0.0) p = 0.0;
    s += p;
  }
  for (double& p : probs) p /= s;
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::relaxed(std::vector<double> probs) {
  check_sum(probs);
  for (double p : probs) {
    if (!std::isfinite(p)) throw std::invalid_argument("strategy entry not finite");
  }
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::unchecked(std::vector<double> probs) {
  if (probs.empty()) throw std::invalid_argument("strategy has no actions");
  for (double p : probs) {
    if (!std::isfinite(p)) throw std::invalid_argument("strategy entry not finite");
  }
  return MixedStrategy(std::move(probs));
}

MixedStrategy MixedStrategy::pure(int num_actions, int action) {
  if (num_actions <= 0) throw std::invalid_argument("num_actions must be positive");
  if (action < 0 || action >= num_actions) {
    throw std::invalid_argument("pure action " + std::to_string(action) +
                                " out of range");
  }
  std::vector<double> p(num_actions, 0.0);
  p[action] = 1.0;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::uniform(int num_actions) {
  if (num_actions <= 0) throw std::invalid_argument("num_actions must be positive");
  return MixedStrategy(std::vector<double>(num_actions, 1.0 / num_actions));
}

bool MixedStrategy::on_simplex() const {
  double s = 0.0;
  for (double p : probs_) {
    if (p < -kSimplexTol) return false;
    s += p;
  }
  return std::abs(s - 1.0) <= kSimplexTol;
}

int MixedStrategy::mode() const {
  int best = 0;
  for (int a = 1; a < num_actions(); ++a) {
    if (probs_[a] > probs_[best]) best = a;
  }
  return best;
}

double MixedStrategy::l2_distance(const MixedStrategy& other) const {
  if (other.num_actions() != num_actions()) {
    throw std::invalid_argument("strategy size mismatch");
  }
  double s = 0.0;
  for (int a = 0; a < num_actions(); ++a) {
    const double d = probs_[a] - other.probs_[a];
    s += d * d;
  }
  return std::sqrt(s);
}

JointStrategy uniform_joint(int num_players, int num_actions) {
  return JointStrategy(num_players, MixedStrategy::uniform(num_actions));
}

JointStrategy pure_joint(const std::vector<int>& actions, int num_actions) {
  JointStrategy out;
  out.reserve(actions.size());
  for (int a : actions) out.push_back(MixedStrategy::pure(num_actions, a));
  return out;
}

}  // namespace ecfp
