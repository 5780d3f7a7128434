#include "bei/corpus.hpp"

namespace bei {

Graph random_connected_graph(std::mt19937_64& rng, int min_n, int max_n) {
  int n = min_n + static_cast<int>(rng() % (max_n - min_n + 1));
  std::vector<std::pair<int, int>> edges;
  // random recursive tree keeps the graph connected
  for (int k = 2; k <= n; ++k) {
    int parent = 1 + static_cast<int>(rng() % (k - 1));
    edges.push_back({parent, k});
  }
  Graph tree(n, edges);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (tree.has_edge(i, j)) continue;
      if (rng() % 100 < 35) edges.push_back({i, j});
    }
  return Graph(n, std::move(edges));
}

std::vector<Graph> random_connected_graphs(int count, int min_n, int max_n,
                                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) out.push_back(random_connected_graph(rng, min_n, max_n));
  return out;
}

std::vector<std::pair<Graph, std::vector<int>>> random_induced_pairs(
    int count, int min_n, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<std::pair<Graph, std::vector<int>>> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    Graph g = random_connected_graph(rng, min_n, max_n);
    std::vector<int> w;
    while (w.empty()) {
      for (int v = 1; v <= g.vertex_count(); ++v)
        if (rng() % 2) w.push_back(v);
    }
    out.push_back({std::move(g), std::move(w)});
  }
  return out;
}

}  // namespace bei
