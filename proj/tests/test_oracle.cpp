#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oddkt/generate.hpp"
#include "oddkt/oracle.hpp"

using namespace oddkt;
using namespace oddkt::fixtures;

namespace {

// Independent ground truth: enumerate every coloring directly.
bool brute_force_odd_colorable(const Graph& g, int colors) {
  std::vector<int> c(g.n, 1);
  for (;;) {
    Coloring col{colors, c};
    if (verify_proper(g, col).ok && verify_odd(g, col).all_ok) return true;
    int i = 0;
    while (i < g.n && c[i] == colors) c[i++] = 1;
    if (i == g.n) return false;
    ++c[i];
  }
}

}  // namespace

TEST_CASE("the k=2 construction needs exactly 4 colors") {
  Graph g = lower_bound_construction(2);
  CHECK(exists_odd_coloring(g, 3).status == OracleStatus::Infeasible);
  auto res = exists_odd_coloring(g, 4);
  REQUIRE(res.status == OracleStatus::Feasible);
  CHECK(is_odd_coloring(g, *res.witness));
  CHECK(brute_force_odd_colorable(g, 4));
  CHECK_FALSE(brute_force_odd_colorable(g, 3));
  auto chrom = odd_chromatic_exact(g);
  CHECK(chrom.exact);
  CHECK(chrom.hi == 4);
}

TEST_CASE("the k=3 construction needs exactly 5 colors") {
  Graph g = lower_bound_construction(3);
  CHECK(exists_odd_coloring(g, 4).status == OracleStatus::Infeasible);
  CHECK(exists_odd_coloring(g, 5).status == OracleStatus::Feasible);
  auto chrom = odd_chromatic_exact(g);
  CHECK(chrom.exact);
  CHECK(chrom.hi == 5);
}

TEST_CASE("path parity: two colors fail, three work") {
  Graph path = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(exists_odd_coloring(path, 2).status == OracleStatus::Infeasible);
  CHECK(exists_odd_coloring(path, 3).status == OracleStatus::Feasible);
  CHECK_FALSE(brute_force_odd_colorable(path, 2));
  CHECK(brute_force_odd_colorable(path, 3));
}

TEST_CASE("complete graphs need exactly n colors") {
  for (int n : {2, 3, 4, 5, 6}) {
    Graph g = complete_graph(n);
    auto res = odd_chromatic_exact(g);
    CHECK(res.exact);
    CHECK(res.hi == n);
  }
}

TEST_CASE("oracle agrees with brute force on small random graphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);  // up to 5 vertices
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < a; ++b)
        if (rng() % 2) es.emplace_back(a, b);
    Graph g = build_graph(n, es);
    for (int colors = 1; colors <= n; ++colors) {
      bool brute = brute_force_odd_colorable(g, colors);
      auto res = exists_odd_coloring(g, colors);
      INFO("n=" << n << " colors=" << colors << " edges=" << g.edge_count());
      CHECK(brute == (res.status == OracleStatus::Feasible));
    }
  }
}

TEST_CASE("feasibility is monotone in the palette") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto [g, ao] = random_ktree({6 + static_cast<int>(rng() % 4), 2, rng(), 0.5});
    bool prev = false;
    for (int colors = 3; colors <= 7; ++colors) {
      bool feas = exists_odd_coloring(g, colors).status == OracleStatus::Feasible;
      if (prev) CHECK(feas);
      prev = feas;
    }
  }
}

TEST_CASE("node budgets surface as a bounded interval") {
  Graph g = lower_bound_construction(3);
  SearchConfig cfg;
  cfg.node_budget = 3;
  auto res = exists_odd_coloring(g, 4, cfg);
  CHECK(res.status == OracleStatus::BudgetExceeded);
  auto chrom = odd_chromatic_exact(g, cfg);
  CHECK_FALSE(chrom.exact);
  CHECK(chrom.lo <= chrom.hi);
  CHECK(chrom.hi >= 5);
  CHECK(chrom.witness.has_value());
}

TEST_CASE("symmetry breaking can be disabled without changing answers") {
  Graph g = lower_bound_construction(2);
  SearchConfig plain;
  plain.symmetry_breaking = false;
  CHECK(exists_odd_coloring(g, 3, plain).status == OracleStatus::Infeasible);
  CHECK(exists_odd_coloring(g, 4, plain).status == OracleStatus::Feasible);
}
