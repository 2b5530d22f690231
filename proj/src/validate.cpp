#include "ecfp/validate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ecfp/metrics.hpp"
#include "ecfp/rng.hpp"

namespace ecfp {
namespace {

// Subset-sum enumeration oracle for opponent-count probabilities.
CountDistribution enumerate_counts(const std::vector<double>& probs) {
  const int n = static_cast<int>(probs.size());
  CountDistribution pmf(n + 1, 0.0);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    double w = 1.0;
    int count = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1ULL << i)) {
        w *= probs[i];
        ++count;
      } else {
        w *= 1.0 - probs[i];
      }
    }
    pmf[count] += w;
  }
  return pmf;
}

double max_abs_diff(const CountDistribution& a, const CountDistribution& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

ValidationCheck check_weights(const ExperimentConfig& config) {
  ValidationCheck check{"weight-matrix", false, ""};
  if (config.graph.kind == GraphSpec::Kind::kNone) {
    check.passed = true;
    check.detail = "skipped: no graph configured";
    return check;
  }
  try {
    const Graph graph = build_graph(config);
    const WeightMatrix w = build_weights(config, graph);
    w.validate(&graph);
    const double lambda = spectral_contraction(w);
    if (lambda >= 1.0 - 1e-12) {
      check.detail = "matrix does not mix: lambda = " + std::to_string(lambda);
      return check;
    }
    std::ostringstream os;
    os << "doubly stochastic, sparsity-conformant, lambda = " << lambda;
    check.passed = true;
    check.detail = os.str();
  } catch (const std::exception& e) {
    check.detail = e.what();
  }
  return check;
}

ValidationCheck check_partition(const ExperimentConfig& config) {
  ValidationCheck check{"partition", false, ""};
  try {
    const PartitionSpec partition = build_partition(config);
    if (config.game.kind != GameSpec::Kind::kTabular) {
      check.passed = true;
      check.detail = partition.describe() +
                     "; congestion costs depend only on counts, so any "
                     "partition preserves the potential";
      return check;
    }
    const Game game = build_game(config);
    if (!game.tabular().is_identical_interest()) {
      check.passed = true;
      check.detail = partition.describe() +
                     "; no potential available, validity asserted by caller";
      return check;
    }
    const bool ok = check_partition_potential_invariance(
        partition, game.num_actions(), game.tabular().utility_table(0));
    check.passed = ok;
    check.detail = ok ? partition.describe() + "; potential is swap-invariant "
                        "within classes"
                      : "potential changes under a within-class action swap";
  } catch (const std::exception& e) {
    check.detail = e.what();
  }
  return check;
}

ValidationCheck check_counts(const ExperimentConfig& config) {
  ValidationCheck check{"count-distributions", false, ""};
  try {
    Rng rng(mix64(config.seed, 0xc0de));
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const int opponents = 1 + rng.next_int(8);
      std::vector<double> probs(opponents);
      for (double& p : probs) p = rng.next_double();
      const CountDistribution oracle = enumerate_counts(probs);
      worst = std::max(
          worst, max_abs_diff(count_distribution_heterogeneous(probs), oracle));
      const double shared = rng.next_double();
      worst = std::max(
          worst,
          max_abs_diff(count_distribution_iid(shared, opponents),
                       enumerate_counts(std::vector<double>(opponents, shared))));
    }
    check.passed = worst <= 1e-10;
    std::ostringstream os;
    os << "max deviation from enumeration: " << worst;
    check.detail = os.str();
  } catch (const std::exception& e) {
    check.detail = e.what();
  }
  return check;
}

ValidationCheck check_potential(const ExperimentConfig& config) {
  ValidationCheck check{"potential-identity", false, ""};
  try {
    const Game game = build_game(config);
    if (game.is_tabular()) {
      if (!game.tabular().is_identical_interest()) {
        check.passed = true;
        check.detail = "skipped: tabular game carries no potential";
        return check;
      }
      check.passed = check_exact_potential(game.tabular(),
                                           game.tabular().utility_table(0));
      check.detail = check.passed
                         ? "common utility is an exact potential"
                         : "common utility fails the deviation identity";
      return check;
    }
    // Shrink to enumeration scale but keep the configured cost curves.
    const CongestionGame& full = game.congestion();
    const int n = std::min(full.num_players(), 4);
    std::vector<CostPolynomial> channels;
    for (int r = 0; r < std::min(full.num_channels(), 3); ++r) {
      channels.push_back(full.channel(r));
    }
    const CongestionGame small(n, std::move(channels));
    const auto [tabular, potential] = small.to_tabular();
    check.passed = check_exact_potential(tabular, potential);
    std::ostringstream os;
    os << "deviation identity on " << n << " players, " << small.num_channels()
       << " channels: " << (check.passed ? "exact" : "violated");
    check.detail = os.str();
  } catch (const std::exception& e) {
    check.detail = e.what();
  }
  return check;
}

ValidationCheck check_tracking(const ExperimentConfig& config) {
  ValidationCheck check{"tracking-bound", false, ""};
  if (config.graph.kind == GraphSpec::Kind::kNone) {
    check.passed = true;
    check.detail = "skipped: no graph configured";
    return check;
  }
  try {
    const Game game = build_game(config);
    const PartitionSpec partition = build_partition(config);
    const Graph graph = build_graph(config);
    const WeightMatrix w = build_weights(config, graph);
    w.validate(&graph);
    const double lambda = spectral_contraction(w);
    if (lambda >= 1.0 - 1e-12) {
      check.detail = "matrix does not mix: lambda = " + std::to_string(lambda);
      return check;
    }
    double scale = 1.0;
    for (int k = 0; k < partition.num_classes(); ++k) {
      scale = std::max(scale, static_cast<double>(game.num_players()) /
                                  partition.class_size(k));
    }
    StepOptions options;
    options.tie_break = config.tie_break;
    options.seed = config.seed;
    std::vector<int> initial(game.num_players(), 0);
    DistributedState state = init_distributed(game, partition, initial, w);
    const int steps = 50;
    double worst_slack = 0.0;
    for (int t = 1; t <= steps; ++t) {
      const double bound =
          scale * tracking_error_bound(game.num_players(), lambda, t);
      const double err = max_estimate_error(state);
      if (err > bound + 1e-9) {
        std::ostringstream os;
        os << "tracking error " << err << " exceeds bound " << bound
           << " at t=" << t;
        check.detail = os.str();
        return check;
      }
      worst_slack = std::max(worst_slack, err / bound);
      if (t < steps) step_distributed(state, game, partition, w, options);
    }
    std::ostringstream os;
    os << steps << "-step run stays within the bound (worst ratio "
       << worst_slack << ")";
    check.passed = true;
    check.detail = os.str();
  } catch (const std::exception& e) {
    check.detail = e.what();
  }
  return check;
}

}  // namespace

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed; });
}

ValidationReport validate_config(const ExperimentConfig& config) {
  ValidationReport report;
  report.checks.push_back(check_weights(config));
  report.checks.push_back(check_partition(config));
  report.checks.push_back(check_counts(config));
  report.checks.push_back(check_potential(config));
  report.checks.push_back(check_tracking(config));
  return report;
}

}  // namespace ecfp
