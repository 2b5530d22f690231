#include "ecfp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ecfp/log.hpp"
#include "ecfp/rng.hpp"

namespace ecfp {
namespace {

constexpr double kUnitSquareDiameter = 1.4142135623730951;

void check_edges(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : g.edges) {
    if (i < 0 || j < 0 || i >= g.n || j >= g.n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (i == j) throw std::invalid_argument("self-loop in edge list");
    const auto key = std::minmax(i, j);
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
  }
}

std::vector<std::pair<double, double>> draw_points(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<double, double>> pts(n);
  for (auto& [x, y] : pts) {
    x = rng.next_double();
    y = rng.next_double();
  }
  return pts;
}

Graph graph_within_radius(const std::vector<std::pair<double, double>>& pts,
                          double radius) {
  Graph g;
  g.n = static_cast<int>(pts.size());
  g.coords = pts;
  const double r2 = radius * radius;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      const double dx = pts[i].first - pts[j].first;
      const double dy = pts[i].second - pts[j].second;
      if (dx * dx + dy * dy <= r2) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

}  // namespace

std::vector<int> degrees(const Graph& g) {
  std::vector<int> deg(g.n, 0);
  for (auto [i, j] : g.edges) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

double average_degree(const Graph& g) {
  if (g.n == 0) return 0.0;
  return 2.0 * g.num_edges() / g.n;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  std::vector<std::vector<int>> adj(g.n);
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == g.n;
}

Graph complete_graph(int n) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one node");
  Graph g;
  g.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
  }
  return g;
}

Graph path_graph(int n) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one node");
  Graph g;
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Graph geometric_random_graph(int n, double radius, std::uint64_t seed,
                             int max_retries) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one node");
  if (radius <= 0.0) throw std::invalid_argument("radius must be positive");
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Graph g = graph_within_radius(draw_points(n, mix64(seed, attempt)), radius);
    if (is_connected(g)) {
      if (attempt > 0) {
        log_info("graph", "connected after " + std::to_string(attempt + 1) +
                              " attempts");
      }
      return g;
    }
  }
  throw std::runtime_error("no connected geometric graph with n=" +
                           std::to_string(n) + " radius=" + std::to_string(radius) +
                           " after " + std::to_string(max_retries) + " attempts");
}

Graph geometric_graph_by_degree(int n, double target_degree, std::uint64_t seed,
                                int max_retries) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one node");
  if (target_degree < 0.0 || target_degree > n - 1) {
    throw std::invalid_argument("target degree outside [0, n-1]");
  }
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    const auto pts = draw_points(n, mix64(seed, attempt));
    double lo = 0.0;
    double hi = kUnitSquareDiameter;
    double best_radius = hi;
    double best_err = std::abs(average_degree(graph_within_radius(pts, hi)) -
                               target_degree);
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double deg = average_degree(graph_within_radius(pts, mid));
      if (std::abs(deg - target_degree) < best_err) {
        best_err = std::abs(deg - target_degree);
        best_radius = mid;
      }
      if (deg < target_degree) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    Graph g = graph_within_radius(pts, best_radius);
    if (is_connected(g)) {
      log_info("graph", "radius " + std::to_string(best_radius) +
                            " gives average degree " +
                            std::to_string(average_degree(g)));
      return g;
    }
  }
  throw std::runtime_error("no connected geometric graph with n=" +
                           std::to_string(n) + " target degree=" +
                           std::to_string(target_degree) + " after " +
                           std::to_string(max_retries) + " attempts");
}

void write_edge_list(const Graph& g, const std::string& path) {
  check_edges(g);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << g.n << ' ' << g.num_edges() << '\n';
  for (auto [i, j] : g.edges) out << i << ' ' << j << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Graph g;
  int count = 0;
  if (!(in >> g.n >> count) || g.n <= 0 || count < 0) {
    throw std::runtime_error("bad edge-list header in " + path);
  }
  for (int e = 0; e < count; ++e) {
    int i = 0;
    int j = 0;
    if (!(in >> i >> j)) {
      throw std::runtime_error("truncated edge list in " + path);
    }
    g.edges.emplace_back(i, j);
  }
  check_edges(g);
  return g;
}

}  // namespace ecfp
