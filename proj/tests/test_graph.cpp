#include <doctest.h>

#include <random>

#include "bei/corpus.hpp"
#include "bei/graph.hpp"

using namespace bei;

namespace {

std::vector<std::pair<int, int>> edge_list(std::initializer_list<std::pair<int, int>> e) {
  return e;
}

}  // namespace

TEST_CASE("family constructors") {
  Graph c4 = build_family(FamilySpec::cycle(4));
  CHECK(c4.edges() == edge_list({{1, 2}, {1, 4}, {2, 3}, {3, 4}}));

  Graph star = build_family(FamilySpec::t3(2, 1, 1));
  CHECK(star.vertex_count() == 4);
  CHECK(star.edges() == edge_list({{1, 2}, {1, 3}, {1, 4}}));

  Graph tri = build_family(FamilySpec::g3(1, 1, 1));
  CHECK(tri.edges() == edge_list({{1, 2}, {1, 3}, {2, 3}}));

  Graph t322 = build_family(FamilySpec::t3(3, 2, 2));
  CHECK(t322.vertex_count() == 7);
  CHECK(t322.has_edge(1, 4));  // u1-v1
  CHECK(t322.has_edge(1, 6));  // u1-w1
  CHECK(t322.has_edge(4, 5));  // v1-v2
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(FamilySpec::cycle(2), ValidationError);
  CHECK_THROWS_AS(FamilySpec::t3(1, 1, 1), ValidationError);
  CHECK_THROWS_AS(FamilySpec::t3(2, 0, 1), ValidationError);
  CHECK_THROWS_AS(FamilySpec::g3(1, 1, 0), ValidationError);
  CHECK_THROWS_AS(FamilySpec::line(0), ValidationError);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), ValidationError);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), ValidationError);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), ValidationError);
  CHECK_THROWS_AS(Graph(0, {}), ValidationError);
  CHECK_THROWS_AS(Graph(65, {}), ValidationError);
}

TEST_CASE("connected components") {
  Graph c4 = build_family(FamilySpec::cycle(4));
  auto comps = connected_components(c4, mask_from_vertices({1, 3}));
  CHECK(comps == std::vector<std::vector<int>>{{2}, {4}});

  Graph line3 = build_family(FamilySpec::line(3));
  CHECK(connected_components(line3, mask_from_vertices({2})) ==
        std::vector<std::vector<int>>{{1}, {3}});
  CHECK(connected_components(line3, 0) == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("components partition the surviving vertices") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = random_connected_graph(rng, 3, 8);
    VertexMask removed = rng() & g.full_mask();
    auto comps = connected_components(g, removed);
    VertexMask seen = 0;
    for (const auto& c : comps) {
      VertexMask m = mask_from_vertices(c);
      CHECK((seen & m) == 0);
      seen |= m;
    }
    CHECK(seen == (g.full_mask() & ~removed));
  }
}

TEST_CASE("cut-sets") {
  Graph c4 = build_family(FamilySpec::cycle(4));
  CHECK(is_cut_set(c4, mask_from_vertices({1, 3})));
  CHECK(is_cut_set(c4, 0));
  Graph tri = build_family(FamilySpec::g3(1, 1, 1));
  CHECK_FALSE(is_cut_set(tri, mask_from_vertices({1})));
  CHECK(is_cut_set(tri, 0));
}

TEST_CASE("maximal cliques") {
  CHECK(maximal_cliques(build_family(FamilySpec::g3(1, 1, 1))) ==
        std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(maximal_cliques(build_family(FamilySpec::line(3))) ==
        std::vector<std::vector<int>>{{1, 2}, {2, 3}});
  auto c5 = maximal_cliques(build_family(FamilySpec::cycle(5)));
  CHECK(c5.size() == 5);
  for (const auto& c : c5) CHECK(c.size() == 2);
}

TEST_CASE("free vertices") {
  CHECK(free_vertices(build_family(FamilySpec::complete(4))) ==
        std::vector<int>{1, 2, 3, 4});
  CHECK(free_vertices(build_family(FamilySpec::cycle(5))).empty());
  // C4 also has none, although the off-by-one folklore says "more than 4"
  CHECK(free_vertices(build_family(FamilySpec::cycle(4))).empty());
  CHECK(free_vertices(build_family(FamilySpec::t3(2, 1, 1))) == std::vector<int>{2, 3, 4});
}

TEST_CASE("free vertex equals clique neighborhood, and leaves are free") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 50; ++iter) {
    Graph g = random_connected_graph(rng, 3, 8);
    auto free = free_vertices(g);
    std::vector<int> by_neighborhood;
    for (int v = 1; v <= g.vertex_count(); ++v) {
      auto nb = vertices_from_mask(g.neighbors(v));
      bool clique = true;
      for (std::size_t a = 0; a < nb.size() && clique; ++a)
        for (std::size_t b = a + 1; b < nb.size() && clique; ++b)
          clique = g.has_edge(nb[a], nb[b]);
      if (clique) by_neighborhood.push_back(v);
    }
    CHECK(free == by_neighborhood);
    for (int v = 1; v <= g.vertex_count(); ++v)
      if (g.degree(v) == 1)
        CHECK(std::find(free.begin(), free.end(), v) != free.end());
  }
}

TEST_CASE("induced subgraphs") {
  Graph c5 = build_family(FamilySpec::cycle(5));
  Graph p = induced_subgraph(c5, {1, 2, 3});
  CHECK(p.edges() == edge_list({{1, 2}, {2, 3}}));

  Graph k4 = build_family(FamilySpec::complete(4));
  CHECK(induced_subgraph(k4, {2, 4}).edges() == edge_list({{1, 2}}));

  Graph c6 = build_family(FamilySpec::cycle(6));
  CHECK(induced_subgraph(c6, {1, 3, 5}).edges().empty());

  std::vector<int> all{1, 2, 3, 4, 5};
  CHECK(induced_subgraph(c5, all).edges() == c5.edges());

  CHECK_THROWS_AS(induced_subgraph(c5, {}), ValidationError);
}

TEST_CASE("graph json round trip and rejection") {
  Graph g = build_family(FamilySpec::t3(2, 2, 1));
  Graph back = graph_from_json(graph_to_json(g));
  CHECK(back.edges() == g.edges());
  CHECK(back.vertex_count() == g.vertex_count());

  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[1,1]]})")),
                  ValidationError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[1,2],[2,1]]})")),
                  ValidationError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[1,3]]})")),
                  ValidationError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"edges":[]})")), ValidationError);
}

TEST_CASE("triangle count") {
  CHECK(build_family(FamilySpec::complete(4)).triangle_count() == 4);
  CHECK(build_family(FamilySpec::cycle(5)).triangle_count() == 0);
  CHECK(build_family(FamilySpec::g3(2, 1, 1)).triangle_count() == 1);
}
