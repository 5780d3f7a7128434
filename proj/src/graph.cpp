#include "bei/graph.hpp"

#include <algorithm>
#include <bit>

namespace bei {

VertexMask mask_from_vertices(const std::vector<int>& vs) {
  VertexMask m = 0;
  for (int v : vs) m |= VertexMask{1} << (v - 1);
  return m;
}

std::vector<int> vertices_from_mask(VertexMask m) {
  std::vector<int> vs;
  while (m) {
    int b = std::countr_zero(m);
    vs.push_back(b + 1);
    m &= m - 1;
  }
  return vs;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 1 || n > max_vertices)
    throw ValidationError("vertex count must be in 1.." + std::to_string(max_vertices) +
                          ", got " + std::to_string(n));
  adj_.assign(n, 0);
  for (auto& [i, j] : edges) {
    if (i > j) std::swap(i, j);
    if (i == j) throw ValidationError("loop at vertex " + std::to_string(i));
    if (i < 1 || j > n)
      throw ValidationError("edge {" + std::to_string(i) + "," + std::to_string(j) +
                            "} out of range 1.." + std::to_string(n));
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t k = 1; k < edges.size(); ++k)
    if (edges[k] == edges[k - 1])
      throw ValidationError("duplicate edge {" + std::to_string(edges[k].first) + "," +
                            std::to_string(edges[k].second) + "}");
  edges_ = std::move(edges);
  for (auto [i, j] : edges_) {
    adj_[i - 1] |= VertexMask{1} << (j - 1);
    adj_[j - 1] |= VertexMask{1} << (i - 1);
  }
}

bool Graph::has_edge(int i, int j) const {
  if (i == j) return false;
  return (adj_[i - 1] >> (j - 1)) & 1;
}

int Graph::degree(int v) const { return std::popcount(adj_[v - 1]); }

VertexMask Graph::full_mask() const {
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

bool Graph::connected() const { return component_count(*this, 0) <= 1; }

int Graph::triangle_count() const {
  int count = 0;
  for (auto [i, j] : edges_)
    count += std::popcount(adj_[i - 1] & adj_[j - 1]);
  return count / 3;  // each triangle is counted once per edge
}

FamilySpec FamilySpec::line(int n) {
  if (n < 1) throw ValidationError("line needs n >= 1, got " + std::to_string(n));
  return {Kind::line, n, 0, 0, 0};
}
FamilySpec FamilySpec::cycle(int n) {
  if (n < 3) throw ValidationError("cycle needs n >= 3, got " + std::to_string(n));
  return {Kind::cycle, n, 0, 0, 0};
}
FamilySpec FamilySpec::complete(int n) {
  if (n < 1) throw ValidationError("complete graph needs n >= 1, got " + std::to_string(n));
  return {Kind::complete, n, 0, 0, 0};
}
FamilySpec FamilySpec::t3(int r, int s, int t) {
  if (r < 2) throw ValidationError("t3 needs r >= 2, got r=" + std::to_string(r));
  if (s < 1 || t < 1)
    throw ValidationError("t3 needs s >= 1 and t >= 1, got s=" + std::to_string(s) +
                          ", t=" + std::to_string(t));
  return {Kind::t3, r + s + t, r, s, t};
}
FamilySpec FamilySpec::g3(int r, int s, int t) {
  if (r < 1 || s < 1 || t < 1)
    throw ValidationError("g3 needs r, s, t >= 1, got r=" + std::to_string(r) +
                          ", s=" + std::to_string(s) + ", t=" + std::to_string(t));
  return {Kind::g3, r + s + t, r, s, t};
}

int FamilySpec::vertex_count() const { return n; }

std::string FamilySpec::name() const {
  switch (kind) {
    case Kind::line: return "line(" + std::to_string(n) + ")";
    case Kind::cycle: return "cycle(" + std::to_string(n) + ")";
    case Kind::complete: return "complete(" + std::to_string(n) + ")";
    case Kind::t3:
      return "t3(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
    case Kind::g3:
      return "g3(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")";
  }
  return "?";
}

Graph build_family(const FamilySpec& spec) {
  std::vector<std::pair<int, int>> edges;
  switch (spec.kind) {
    case FamilySpec::Kind::line:
      for (int i = 1; i < spec.n; ++i) edges.push_back({i, i + 1});
      break;
    case FamilySpec::Kind::cycle:
      for (int i = 1; i < spec.n; ++i) edges.push_back({i, i + 1});
      edges.push_back({1, spec.n});
      break;
    case FamilySpec::Kind::complete:
      for (int i = 1; i <= spec.n; ++i)
        for (int j = i + 1; j <= spec.n; ++j) edges.push_back({i, j});
      break;
    case FamilySpec::Kind::t3:
    case FamilySpec::Kind::g3: {
      // u1..ur -> 1..r, v1..vs -> r+1..r+s, w1..wt -> r+s+1..n
      int u1 = 1, v1 = spec.r + 1, w1 = spec.r + spec.s + 1;
      for (int i = 0; i + 1 < spec.r; ++i) edges.push_back({u1 + i, u1 + i + 1});
      for (int i = 0; i + 1 < spec.s; ++i) edges.push_back({v1 + i, v1 + i + 1});
      for (int i = 0; i + 1 < spec.t; ++i) edges.push_back({w1 + i, w1 + i + 1});
      edges.push_back({u1, v1});
      edges.push_back({u1, w1});
      if (spec.kind == FamilySpec::Kind::g3) edges.push_back({v1, w1});
      break;
    }
  }
  return Graph(spec.n, std::move(edges));
}

int component_count(const Graph& g, VertexMask removed) {
  VertexMask alive = g.full_mask() & ~removed;
  int count = 0;
  while (alive) {
    ++count;
    VertexMask comp = alive & -alive;
    for (;;) {
      VertexMask grow = comp;
      VertexMask m = comp;
      while (m) {
        int b = std::countr_zero(m);
        grow |= g.neighbors(b + 1) & alive;
        m &= m - 1;
      }
      if (grow == comp) break;
      comp = grow;
    }
    alive &= ~comp;
  }
  return count;
}

std::vector<std::vector<int>> connected_components(const Graph& g, VertexMask removed) {
  VertexMask alive = g.full_mask() & ~removed;
  std::vector<std::vector<int>> comps;
  while (alive) {
    VertexMask comp = alive & -alive;
    for (;;) {
      VertexMask grow = comp;
      VertexMask m = comp;
      while (m) {
        int b = std::countr_zero(m);
        grow |= g.neighbors(b + 1) & alive;
        m &= m - 1;
      }
      if (grow == comp) break;
      comp = grow;
    }
    comps.push_back(vertices_from_mask(comp));
    alive &= ~comp;
  }
  // seeds are taken in ascending order, so the list is sorted by minimum vertex
  return comps;
}

bool is_cut_set(const Graph& g, VertexMask T) {
  if (T == 0) return true;
  int c = component_count(g, T);
  VertexMask m = T;
  while (m) {
    VertexMask bit = m & -m;
    if (component_count(g, T & ~bit) >= c) return false;
    m &= m - 1;
  }
  return true;
}

namespace {

void bron_kerbosch(const Graph& g, VertexMask R, VertexMask P, VertexMask X,
                   std::vector<VertexMask>& out) {
  if (!P && !X) {
    out.push_back(R);
    return;
  }
  // pivot with the most neighbors inside P
  VertexMask PX = P | X;
  int pivot = -1, best = -1;
  VertexMask m = PX;
  while (m) {
    int b = std::countr_zero(m);
    int k = std::popcount(g.neighbors(b + 1) & P);
    if (k > best) {
      best = k;
      pivot = b;
    }
    m &= m - 1;
  }
  VertexMask cand = P & ~g.neighbors(pivot + 1);
  while (cand) {
    VertexMask bit = cand & -cand;
    int v = std::countr_zero(bit) + 1;
    bron_kerbosch(g, R | bit, P & g.neighbors(v), X & g.neighbors(v), out);
    P &= ~bit;
    X |= bit;
    cand &= cand - 1;
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<VertexMask> masks;
  bron_kerbosch(g, 0, g.full_mask(), 0, masks);
  std::vector<std::vector<int>> cliques;
  cliques.reserve(masks.size());
  for (VertexMask m : masks) cliques.push_back(vertices_from_mask(m));
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

std::vector<int> free_vertices(const Graph& g) {
  auto cliques = maximal_cliques(g);
  std::vector<int> hits(g.vertex_count() + 1, 0);
  for (const auto& c : cliques)
    for (int v : c) ++hits[v];
  std::vector<int> out;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (hits[v] == 1) out.push_back(v);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& W) {
  if (W.empty()) throw ValidationError("induced subgraph needs a nonempty vertex set");
  std::vector<int> sorted = W;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted)
    if (v < 1 || v > g.vertex_count())
      throw ValidationError("vertex " + std::to_string(v) + " out of range");
  std::vector<int> index(g.vertex_count() + 1, 0);
  for (std::size_t k = 0; k < sorted.size(); ++k) index[sorted[k]] = static_cast<int>(k) + 1;
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : g.edges())
    if (index[i] && index[j]) edges.push_back({index[i], index[j]});
  return Graph(static_cast<int>(sorted.size()), std::move(edges));
}

Graph attach_pendant(const Graph& g, int v) {
  if (v < 1 || v > g.vertex_count())
    throw ValidationError("vertex " + std::to_string(v) + " out of range");
  auto edges = g.edges();
  edges.push_back({v, g.vertex_count() + 1});
  return Graph(g.vertex_count() + 1, std::move(edges));
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ValidationError("graph JSON must be {\"n\": <int>, \"edges\": [[i,j],...]}");
  if (!j["n"].is_number_integer()) throw ValidationError("graph JSON: n must be an integer");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ValidationError("graph JSON: each edge must be a pair of integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Graph(n, std::move(edges));
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  auto edges = nlohmann::json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace bei
