#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ecfp/cne.hpp"
#include "ecfp/consensus.hpp"
#include "ecfp/experiment.hpp"
#include "ecfp/graph.hpp"
#include "ecfp/validate.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void print_summary(const ecfp::ExperimentSummary& s, const std::string& out_path,
                   std::size_t records) {
  std::printf("algorithm %s  players %d  horizon %d\n", s.algorithm.c_str(),
              s.players, s.horizon);
  if (s.distributed) {
    std::printf("graph: average degree %.4g, lambda %.6g\n", s.avg_degree,
                s.lambda);
  }
  if (s.cne_solved) {
    std::printf("cne: residual %.6g\n", s.cne_residual);
  }
  std::printf("final: gap %.6g  dist_cne %.6g  centroid_utility %.6g\n",
              s.final_gap, s.final_dist, s.final_utility);
  if (s.steps_to_threshold >= 0) {
    std::printf("steps to dist_cne<=0.1: %d\n", s.steps_to_threshold);
  }
  std::printf("%zu records written to %s\n", records, out_path.c_str());
  std::printf("wall %.3f s\n", s.wall_seconds);
}

int cmd_run(const std::string& config_path, const std::string& out_path) {
  const ecfp::ExperimentConfig config = ecfp::parse_config_file(config_path);
  const ecfp::ExperimentResult result = ecfp::run_experiment(config);
  ecfp::emit_csv(result.records, out_path);
  print_summary(result.summary, out_path, result.records.size());
  return 0;
}

int cmd_cne(const std::string& config_path) {
  const ecfp::ExperimentConfig config = ecfp::parse_config_file(config_path);
  const ecfp::Game game = ecfp::build_game(config);
  if (game.is_tabular()) {
    std::cerr << "error: the cne command needs a congestion game\n";
    return kExitFailure;
  }
  const ecfp::CneResult result = ecfp::solve_cne(game.congestion(), config.cne);
  std::printf("residual %.12g after %d iterations (%s)\n", result.residual,
              result.iters, result.converged ? "converged" : "NOT converged");
  for (int r = 0; r < result.strategy.num_actions(); ++r) {
    std::printf("channel %d: %.12g\n", r, result.strategy[r]);
  }
  return result.converged ? 0 : kExitFailure;
}

int cmd_graph_gen(int n, double radius, double target_degree, std::uint64_t seed,
                  int max_retries, const std::string& out_path) {
  if ((radius > 0) == (target_degree > 0)) {
    std::cerr << "error: give exactly one of --radius or --target-degree\n";
    return kExitUsage;
  }
  const ecfp::Graph g =
      radius > 0
          ? ecfp::geometric_random_graph(n, radius, seed, max_retries)
          : ecfp::geometric_graph_by_degree(n, target_degree, seed, max_retries);
  ecfp::write_edge_list(g, out_path);
  std::printf("nodes %d  edges %d  avg_degree %.4f  connected yes\n", g.n,
              g.num_edges(), ecfp::average_degree(g));
  std::printf("written to %s\n", out_path.c_str());
  return 0;
}

int cmd_graph_info(const std::string& path) {
  const ecfp::Graph g = ecfp::read_edge_list(path);
  const bool connected = ecfp::is_connected(g);
  std::printf("nodes %d  edges %d  avg_degree %.4f  connected %s\n", g.n,
              g.num_edges(), ecfp::average_degree(g), connected ? "yes" : "no");
  if (connected) {
    const ecfp::WeightMatrix w = ecfp::metropolis_hastings_weights(g);
    std::printf("metropolis-hastings lambda %.9f\n",
                ecfp::spectral_contraction(w));
  }
  return 0;
}

int cmd_validate(const std::string& config_path) {
  const ecfp::ExperimentConfig config = ecfp::parse_config_file(config_path);
  const ecfp::ValidationReport report = ecfp::validate_config(config);
  for (const auto& check : report.checks) {
    std::printf("%s %s: %s\n", check.passed ? "ok  " : "FAIL", check.name.c_str(),
                check.detail.c_str());
  }
  if (!report.all_passed()) {
    std::cerr << "validation failed\n";
    return kExitFailure;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learning simulator for large potential games: fictitious play "
               "and empirical-centroid variants, with a fully distributed mode "
               "over sparse communication graphs"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;

  CLI::App* run = app.add_subcommand("run", "run an experiment and write a CSV");
  run->add_option("config", config_path, "experiment config (JSON)")->required();
  run->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* cne =
      app.add_subcommand("cne", "solve the consensus equilibrium of the game");
  cne->add_option("config", config_path, "experiment config (JSON)")->required();

  CLI::App* graph = app.add_subcommand("graph", "generate or inspect graphs");
  graph->require_subcommand(1);
  int gen_n = 0;
  double gen_radius = -1.0;
  double gen_degree = -1.0;
  std::uint64_t gen_seed = 0;
  int gen_retries = 100;
  std::string graph_path;
  CLI::App* gen = graph->add_subcommand("gen", "generate a geometric graph");
  gen->add_option("--n", gen_n, "node count")->required();
  gen->add_option("--radius", gen_radius, "connection radius");
  gen->add_option("--target-degree", gen_degree, "average degree to hit");
  gen->add_option("--seed", gen_seed, "point-placement seed");
  gen->add_option("--max-retries", gen_retries, "connectivity retries");
  gen->add_option("--out", graph_path, "edge-list output path")->required();
  std::string info_path;
  CLI::App* info = graph->add_subcommand("info", "inspect an edge-list file");
  info->add_option("file", info_path, "edge-list path")->required();

  CLI::App* validate =
      app.add_subcommand("validate", "run the invariant suite for a config");
  validate->add_option("config", config_path, "experiment config (JSON)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(config_path, out_path);
    if (cne->parsed()) return cmd_cne(config_path);
    if (graph->parsed()) {
      if (gen->parsed()) {
        return cmd_graph_gen(gen_n, gen_radius, gen_degree, gen_seed, gen_retries,
                             graph_path);
      }
      return cmd_graph_info(info_path);
    }
    if (validate->parsed()) return cmd_validate(config_path);
  } catch (const ecfp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
