#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ecfp/cne.hpp"
#include "ecfp/consensus.hpp"
#include "ecfp/experiment.hpp"
#include "ecfp/metrics.hpp"
#include "ecfp/validate.hpp"

namespace py = pybind11;
using namespace ecfp;

namespace {

JointStrategy to_joint(const std::vector<std::vector<double>>& probs) {
  JointStrategy joint;
  joint.reserve(probs.size());
  for (const auto& p : probs) joint.push_back(MixedStrategy::strict(p));
  return joint;
}

CongestionGame make_congestion(int players,
                               const std::vector<std::vector<double>>& channels) {
  std::vector<CostPolynomial> costs;
  costs.reserve(channels.size());
  for (const auto& c : channels) costs.emplace_back(c);
  return CongestionGame(players, std::move(costs));
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n = n;
  for (auto [i, j] : edges) {
    g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  return g;
}

py::dict summary_dict(const ExperimentSummary& s) {
  py::dict d;
  d["players"] = s.players;
  d["horizon"] = s.horizon;
  d["algorithm"] = s.algorithm;
  d["final_gap"] = s.final_gap;
  d["final_dist"] = s.final_dist;
  d["final_utility"] = s.final_utility;
  d["steps_to_threshold"] = s.steps_to_threshold;
  d["avg_degree"] = s.avg_degree;
  d["lambda"] = s.lambda;
  d["distributed"] = s.distributed;
  d["cne_solved"] = s.cne_solved;
  d["cne_residual"] = s.cne_residual;
  d["wall_seconds"] = s.wall_seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ecfp, m) {
  m.doc() = "Fictitious play and empirical-centroid learning for large "
            "potential games, with a distributed consensus-based variant";

  py::class_<CongestionGame>(m, "CongestionGame")
      .def(py::init(&make_congestion), py::arg("players"), py::arg("channels"),
           "channels: one coefficient list per channel, constant term first")
      .def_static("random", &CongestionGame::random, py::arg("players"),
                  py::arg("channels"), py::arg("degree"), py::arg("seed"))
      .def_property_readonly("num_players", &CongestionGame::num_players)
      .def_property_readonly("num_channels", &CongestionGame::num_channels)
      .def("pure_utility", &CongestionGame::pure_utility, py::arg("profile"),
           py::arg("player"))
      .def("rosenthal_potential", &CongestionGame::rosenthal_potential,
           py::arg("profile"))
      .def("channel_cost",
           [](const CongestionGame& g, int channel, int load) {
             return g.channel(channel)(load);
           },
           py::arg("channel"), py::arg("load"));

  py::class_<TabularGame>(m, "TabularGame")
      .def(py::init<int, int, std::vector<std::vector<double>>>(),
           py::arg("players"), py::arg("actions"), py::arg("utilities"))
      .def_static("identical_interest", &TabularGame::identical_interest,
                  py::arg("players"), py::arg("actions"), py::arg("common_utility"))
      .def_property_readonly("num_players", &TabularGame::num_players)
      .def_property_readonly("num_actions", &TabularGame::num_actions)
      .def("utility",
           [](const TabularGame& g, int player, const Profile& y) {
             return g.utility(player, y);
           },
           py::arg("player"), py::arg("profile"));

  m.def("mixed_utility",
        [](const TabularGame& g, const std::vector<std::vector<double>>& p,
           int player) { return mixed_utility(g, to_joint(p), player); },
        py::arg("game"), py::arg("strategies"), py::arg("player"));
  m.def("equilibrium_gap",
        [](const TabularGame& g, const std::vector<std::vector<double>>& p) {
          return equilibrium_gap(g, to_joint(p));
        },
        py::arg("game"), py::arg("strategies"));
  m.def("consensus_gap",
        [](const TabularGame& g, const std::vector<double>& f) {
          return consensus_gap(g, MixedStrategy::strict(f));
        },
        py::arg("game"), py::arg("shared_strategy"));

  m.def("count_distribution_iid", &count_distribution_iid, py::arg("prob"),
        py::arg("opponents"));
  m.def("count_distribution_heterogeneous", &count_distribution_heterogeneous,
        py::arg("probs"));
  m.def("channel_utilities",
        [](const CongestionGame& g, const std::vector<double>& shared) {
          return channel_utilities_shared(g, MixedStrategy::relaxed(shared));
        },
        py::arg("game"), py::arg("shared_strategy"),
        "expected utility of each channel when every opponent plays the "
        "shared distribution");
  m.def("best_response",
        [](const CongestionGame& g, const std::vector<double>& shared) {
          const MixedStrategy s = MixedStrategy::relaxed(shared);
          const Game game(g);
          return best_response(game, 0,
                               BeliefProfile::shared(s, g.num_players()));
        },
        py::arg("game"), py::arg("shared_strategy"));

  m.def("solve_cne",
        [](const CongestionGame& g, double tol, int max_iters) {
          CneOptions options;
          options.tol = tol;
          options.max_iters = max_iters;
          const CneResult r = solve_cne(g, options);
          return py::make_tuple(r.strategy.probs(), r.residual, r.iters,
                                r.converged);
        },
        py::arg("game"), py::arg("tol") = 1e-8, py::arg("max_iters") = 200000,
        "returns (strategy, residual, iterations, converged)");

  m.def("geometric_graph",
        [](int n, double target_degree, std::uint64_t seed) {
          const Graph g = geometric_graph_by_degree(n, target_degree, seed);
          return py::make_tuple(g.edges, average_degree(g));
        },
        py::arg("n"), py::arg("target_degree"), py::arg("seed"),
        "returns (edges, average_degree) of a connected geometric graph");
  m.def("metropolis_hastings_weights",
        [](int n, const std::vector<std::pair<int, int>>& edges) {
          return Eigen::MatrixXd(
              metropolis_hastings_weights(graph_from_edges(n, edges)).mat());
        },
        py::arg("n"), py::arg("edges"));
  m.def("spectral_contraction",
        [](const Eigen::MatrixXd& w) {
          return spectral_contraction(WeightMatrix(w));
        },
        py::arg("weights"));
  m.def("tracking_error_bound", &tracking_error_bound, py::arg("num_players"),
        py::arg("lambda_"), py::arg("t"));

  m.def("run_experiment",
        [](const std::string& config_json) {
          const ExperimentConfig config = parse_config_json(config_json);
          const ExperimentResult result = run_experiment(config);
          py::list records;
          for (const auto& r : result.records) {
            records.append(py::make_tuple(r.t, r.gap, r.dist_cne,
                                          r.centroid_utility, r.max_est_err,
                                          r.err_bound));
          }
          py::dict out;
          out["records"] = records;
          out["summary"] = summary_dict(result.summary);
          out["csv"] = records_to_csv(result.records);
          if (result.cne.has_value()) out["cne"] = result.cne->probs();
          return out;
        },
        py::arg("config_json"),
        "runs a JSON-configured experiment; records are "
        "(t, gap, dist_cne, centroid_utility, max_est_err, err_bound)");

  m.def("validate_config",
        [](const std::string& config_json) {
          const ValidationReport report =
              validate_config(parse_config_json(config_json));
          py::list checks;
          for (const auto& c : report.checks) {
            checks.append(py::make_tuple(c.name, c.passed, c.detail));
          }
          return checks;
        },
        py::arg("config_json"),
        "returns (name, passed, detail) for each invariant check");

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
}
