#include <catch2/catch_amalgamated.hpp>

#include "oddkt/generate.hpp"
#include "oddkt/verify.hpp"

using namespace oddkt;

TEST_CASE("properness checks find the first bad edge") {
  Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(verify_proper(k3, {3, {1, 2, 3}}).ok);
  Graph edge = build_graph(2, {{0, 1}});
  auto bad = verify_proper(edge, {2, {1, 1}});
  CHECK_FALSE(bad.ok);
  CHECK(bad.u == 0);
  CHECK(bad.v == 1);
}

TEST_CASE("the construction's unique bad coloring is proper but not odd at u0") {
  Graph g = lower_bound_construction(2);
  Coloring c = lower_bound_bad_coloring(2);  // v1=u1=1, v2=u2=2, u0=3
  CHECK(verify_proper(g, c).ok);
  OddReport rep = verify_odd(g, c);
  CHECK_FALSE(rep.all_ok);
  CHECK(rep.failing() == std::vector<Vertex>{2});  // u0 has id 2
  for (Vertex v : {0, 1, 3, 4}) CHECK(rep.status[v] == OddStatus::Witnessed);
  CHECK_FALSE(odd_condition_witness(g, c, 2).has_value());
}

TEST_CASE("verify_odd insists on properness first") {
  Graph edge = build_graph(2, {{0, 1}});
  CHECK_THROWS_AS(verify_odd(edge, Coloring{2, {1, 1}}), NotProper);
}

TEST_CASE("triangle with distinct colors is fully witnessed") {
  Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  OddReport rep = verify_odd(k3, {3, {1, 2, 3}});
  CHECK(rep.all_ok);
  for (Vertex v = 0; v < 3; ++v) CHECK(rep.witness[v] >= 1);
}

TEST_CASE("path parity cases") {
  Graph path = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(verify_odd(path, {3, {1, 2, 3}}).all_ok);
  OddReport rep = verify_odd(path, {3, {1, 2, 1}});
  CHECK_FALSE(rep.all_ok);
  CHECK(rep.failing() == std::vector<Vertex>{1});
}

TEST_CASE("isolated vertices are exempt") {
  Graph g = build_graph(3, {{0, 1}});
  OddReport rep = verify_odd(g, {2, {1, 2, 1}});
  CHECK(rep.all_ok);
  CHECK(rep.status[2] == OddStatus::Exempt);
}

TEST_CASE("witness reporting picks the smallest color") {
  // center sees colors {2,2,3}: 3 is the only odd class
  Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  Coloring c{3, {1, 2, 2, 3}};
  CHECK(odd_condition_witness(star, c, 0) == 3);
  // center sees {2,3,3,2}: nothing odd
  Graph star4 = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK_FALSE(odd_condition_witness(star4, {3, {1, 2, 3, 3, 2}}, 0).has_value());
}

TEST_CASE("odd-degree vertices are always witnessed under proper colorings") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 3 + static_cast<int>(rng() % 10);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < a; ++b)
        if (rng() % 100 < 45) es.emplace_back(a, b);
    Graph g = build_graph(n, es);
    int palette = 1;
    for (Vertex v = 0; v < n; ++v) palette = std::max(palette, g.degree(v) + 1);
    Coloring c = random_proper_coloring(g, palette, rng());
    REQUIRE(verify_proper(g, c).ok);
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) % 2 == 1) CHECK(odd_condition_witness(g, c, v).has_value());
  }
}

TEST_CASE("low-degree vertices of k-trees are always witnessed") {
  std::mt19937_64 rng(11);
  for (int k : {2, 3, 4, 6}) {
    for (int trial = 0; trial < 60; ++trial) {
      int n = k + 2 + static_cast<int>(rng() % 20);
      auto [g, ao] = random_ktree({n, k, rng(), 0.5});
      int palette = 1;
      for (Vertex v = 0; v < n; ++v) palette = std::max(palette, g.degree(v) + 1);
      Coloring c = random_proper_coloring(g, palette, rng());
      for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) <= 2 * k - 1) CHECK(odd_condition_witness(g, c, v).has_value());
    }
  }
}

TEST_CASE("coloring text round-trips") {
  Coloring c{4, {2, 1, 4, 3}};
  std::ostringstream os;
  format_coloring(os, c);
  std::istringstream is(os.str());
  Coloring d = parse_coloring(is);
  CHECK(d.palette == c.palette);
  CHECK(d.color == c.color);
}
