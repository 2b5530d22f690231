#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ecfp {

// Undirected simple graph; optional unit-square coordinates when generated
// geometrically.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, unique
  std::vector<std::pair<double, double>> coords;  // empty or size n

  int num_edges() const { return static_cast<int>(edges.size()); }
};

std::vector<int> degrees(const Graph& g);
double average_degree(const Graph& g);
bool is_connected(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);

// n points uniform on the unit square, edges between pairs within radius.
// Redraws the points with a fresh derived seed until the graph is connected;
// throws after max_retries failures.
Graph geometric_random_graph(int n, double radius, std::uint64_t seed,
                             int max_retries = 100);

// Bisects the connection radius over a fixed point set to approach the target
// average degree, redrawing points if the result is disconnected.
Graph geometric_graph_by_degree(int n, double target_degree, std::uint64_t seed,
                                int max_retries = 100);

// Text format: first line "<n> <edge-count>", then one "i j" pair per line,
// 0-indexed. Coordinates are not serialized.
void write_edge_list(const Graph& g, const std::string& path);
Graph read_edge_list(const std::string& path);

}  // namespace ecfp
