#include <catch2/catch_amalgamated.hpp>

#include "oddkt/generate.hpp"
#include "oddkt/graph.hpp"

using namespace oddkt;

TEST_CASE("triangle builds canonically") {
  Graph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(g.n == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.collapsed_duplicates);
  for (Vertex v = 0; v < 3; ++v) CHECK(std::is_sorted(g.adj[v].begin(), g.adj[v].end()));
}

TEST_CASE("duplicate edges collapse with a flag") {
  Graph g = build_graph(2, {{0, 1}, {1, 0}});
  CHECK(g.edge_count() == 1);
  CHECK(g.collapsed_duplicates);
}

TEST_CASE("bad edges are rejected") {
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), BuildError);
  CHECK_THROWS_AS(build_graph(3, {{1, 1}}), BuildError);
}

TEST_CASE("the k=2 lower-bound construction has 5 vertices and 7 edges") {
  Graph g = lower_bound_construction(2);
  CHECK(g.n == 5);
  CHECK(g.edge_count() == 7);
  // clique {v1,v2,u0} = {0,1,2}; u1=3 misses v1=0; u2=4 misses v2=1
  CHECK(is_clique(g, {0, 1, 2}));
  CHECK_FALSE(g.has_edge(3, 0));
  CHECK_FALSE(g.has_edge(4, 1));
  CHECK(g.has_edge(3, 2));
  CHECK(g.has_edge(4, 2));
}

TEST_CASE("graph text round-trips and accepts comments") {
  Graph g = lower_bound_construction(2);
  std::string text = "# comment\n" + graph_to_string(g) + "# trailing\n";
  Graph h = parse_graph_string(text);
  CHECK(g == h);
  CHECK_THROWS_AS(parse_graph_string("3 2\n0 1\n"), ParseError);
}

TEST_CASE("induced subgraphs keep adjacency through the origin map") {
  Graph g = lower_bound_construction(2);
  Induced sub = induced_subgraph(g, {0, 2, 3});
  CHECK(sub.g.n == 3);
  for (Vertex a = 0; a < sub.g.n; ++a)
    for (Vertex b = 0; b < sub.g.n; ++b)
      CHECK(sub.g.has_edge(a, b) == g.has_edge(sub.origin[a], sub.origin[b]));
}

TEST_CASE("component extraction respects removed vertices") {
  // triangle {a,b,c} plus pendant structure: removing {b,c} isolates d from a
  Graph g = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 4}});
  auto comp = component_avoiding(g, 3, {1, 2});
  CHECK(comp == std::vector<Vertex>{3, 4});
}
