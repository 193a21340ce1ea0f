#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oddkt/generate.hpp"

using namespace oddkt;
using namespace oddkt::fixtures;

TEST_CASE("random k-tree base case is the complete graph") {
  auto [g, ao] = random_ktree({4, 3, 9, 0.5});
  CHECK(g == complete_graph(4));
}

TEST_CASE("random k-trees carry valid certificates and a fixed seed repeats") {
  for (int k : {1, 2, 3, 7}) {
    auto [g1, ao1] = random_ktree({k + 9, k, 12345, 0.5});
    auto [g2, ao2] = random_ktree({k + 9, k, 12345, 0.5});
    CHECK(g1 == g2);
    CHECK(ao1.order == ao2.order);
    validate_addition_ordering(g1, ao1);
    auto [g3, ao3] = random_ktree({k + 9, k, 54321, 0.5});
    if (k >= 2) CHECK_FALSE(g1 == g3);  // overwhelmingly likely to differ
  }
}

TEST_CASE("attachment bias still produces valid k-trees") {
  for (double bias : {0.0, 0.15, 0.85, 1.0}) {
    auto [g, ao] = random_ktree({40, 2, 7, bias});
    validate_addition_ordering(g, ao);
  }
}

TEST_CASE("canonical forms are isomorphism invariants") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < a; ++b)
        if (rng() % 2) es.emplace_back(a, b);
    Graph g = build_graph(n, es);
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    std::vector<std::pair<Vertex, Vertex>> pes;
    for (auto [a, b] : es) pes.emplace_back(perm[a], perm[b]);
    Graph h = build_graph(n, pes);
    CHECK(canonical_form(g) == canonical_form(h));
  }
  Graph path4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph star4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(canonical_form(path4) != canonical_form(star4));
}

TEST_CASE("enumeration counts for small 2-trees") {
  CHECK(enumerate_small_ktrees(3, 2).size() == 1);
  CHECK(enumerate_small_ktrees(4, 2).size() == 1);
  CHECK(enumerate_small_ktrees(5, 2).size() == 2);
  CHECK(enumerate_small_ktrees(6, 2).size() == 5);
  CHECK(enumerate_small_ktrees(7, 2).size() == 12);
  CHECK(enumerate_small_ktrees(8, 2).size() == 39);
}

TEST_CASE("enumeration counts for small 3- and 4-trees") {
  CHECK(enumerate_small_ktrees(4, 3).size() == 1);
  CHECK(enumerate_small_ktrees(5, 3).size() == 1);
  CHECK(enumerate_small_ktrees(6, 3).size() == 2);
  CHECK(enumerate_small_ktrees(7, 3).size() == 5);
  CHECK(enumerate_small_ktrees(5, 4).size() == 1);
  CHECK(enumerate_small_ktrees(7, 4).size() == 2);
}

TEST_CASE("enumeration agrees with filtering all graphs", "[slow-ish]") {
  // all graphs on 5 and 6 vertices, filtered for the 2-tree property and
  // deduplicated by canonical form
  for (int n : {5, 6}) {
    int pairs = n * (n - 1) / 2;
    std::vector<std::pair<Vertex, Vertex>> all_pairs;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < a; ++b) all_pairs.emplace_back(a, b);
    std::vector<std::vector<std::uint32_t>> keys;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      if (static_cast<int>(__builtin_popcount(mask)) != 2 * n - 3) continue;
      std::vector<std::pair<Vertex, Vertex>> es;
      for (int i = 0; i < pairs; ++i)
        if (mask & (1u << i)) es.push_back(all_pairs[i]);
      Graph g = build_graph(n, es);
      if (!try_recognize_ktree(g, 2)) continue;
      auto key = canonical_form(g);
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
    CHECK(keys.size() == enumerate_small_ktrees(n, 2).size());
  }
}

TEST_CASE("random proper colorings are proper") {
  for (int i = 0; i < 30; ++i) {
    auto [g, ao] = random_ktree({12, 3, 99u + i, 0.5});
    int palette = 1;
    for (Vertex v = 0; v < g.n; ++v) palette = std::max(palette, g.degree(v) + 1);
    Coloring c = random_proper_coloring(g, palette, i);
    CHECK(verify_proper(g, c).ok);
  }
}
