#ifndef BEI_GRAPH_HPP
#define BEI_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bei/errors.hpp"

namespace bei {

// Vertex subsets as bitmasks; bit v-1 stands for vertex v (vertices are
// 1-based everywhere in the public interface).
using VertexMask = std::uint64_t;

VertexMask mask_from_vertices(const std::vector<int>& vs);
std::vector<int> vertices_from_mask(VertexMask m);

// Labeled simple undirected graph on 1..n, immutable after construction.
class Graph {
public:
  static constexpr int max_vertices = 64;

  Graph(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;
  VertexMask neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const;
  VertexMask full_mask() const;
  bool connected() const;
  int triangle_count() const;

private:
  int n_;
  std::vector<std::pair<int, int>> edges_;  // sorted, i < j
  std::vector<VertexMask> adj_;
};

struct FamilySpec {
  enum class Kind { line, cycle, complete, t3, g3 };
  Kind kind;
  int n = 0;           // line / cycle / complete
  int r = 0, s = 0, t = 0;  // t3 / g3

  static FamilySpec line(int n);
  static FamilySpec cycle(int n);
  static FamilySpec complete(int n);
  static FamilySpec t3(int r, int s, int t);
  static FamilySpec g3(int r, int s, int t);

  int vertex_count() const;
  std::string name() const;
};

// Canonical vertex numbering: 1..n in path order for line/cycle/complete;
// u1..ur, v1..vs, w1..wt mapped to 1..n in that order for t3/g3.
Graph build_family(const FamilySpec& spec);

// Components of the graph with `removed` deleted, each sorted, the list
// ordered by minimum vertex.
std::vector<std::vector<int>> connected_components(const Graph& g, VertexMask removed);
int component_count(const Graph& g, VertexMask removed);

// T is admissible: empty, or deleting any single element strictly drops the
// component count.
bool is_cut_set(const Graph& g, VertexMask T);

// All maximal cliques (facets of the clique complex), each sorted, the list
// sorted lexicographically.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

// Vertices lying in exactly one maximal clique.
std::vector<int> free_vertices(const Graph& g);

// Graph on 1..|W| via the order-preserving relabeling of W.
Graph induced_subgraph(const Graph& g, const std::vector<int>& W);

// Same graph with one extra vertex n+1 joined to v.
Graph attach_pendant(const Graph& g, int v);

Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

}  // namespace bei

#endif
