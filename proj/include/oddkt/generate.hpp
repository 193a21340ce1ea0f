#pragma once

#include <cmath>
#include <random>

#include "oddkt/ordering.hpp"
#include "oddkt/verify.hpp"

namespace oddkt {

struct GenSpec {
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  double attachment_bias = 0.5;  // 0.5 = uniform over cliques; higher favors recent cliques
};

// Random k-tree grown from K_{k+1} by attaching each new vertex to a k-clique.
// The clique is sampled with weight exp(lambda * recency) where lambda is 0 at
// bias 0.5, so 0.5 is the uniform attachment model. Deterministic given seed.
inline std::pair<Graph, AdditionOrdering> random_ktree(const GenSpec& spec) {
  require(spec.k >= 1 && spec.n >= spec.k + 1, "random k-tree needs n >= k+1 and k >= 1");
  require(spec.attachment_bias >= 0.0 && spec.attachment_bias <= 1.0,
          "attachment bias lies in [0,1]");
  int n = spec.n, k = spec.k;
  std::mt19937_64 rng(spec.seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<Vertex>> cliques;  // k-cliques in creation order
  std::vector<Vertex> order;
  for (Vertex v = 0; v < k + 1; ++v) {
    order.push_back(v);
    for (Vertex w = 0; w < v; ++w) edges.emplace_back(v, w);
  }
  {
    // all k-subsets of the base clique
    std::vector<Vertex> base(k + 1);
    for (int i = 0; i <= k; ++i) base[i] = i;
    for (int skip = k; skip >= 0; --skip) {
      std::vector<Vertex> q;
      for (int i = 0; i <= k; ++i)
        if (i != skip) q.push_back(base[i]);
      cliques.push_back(std::move(q));
    }
  }
  // Sampling is hand-rolled (no std distributions) so output bytes do not
  // depend on the standard library implementation.
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  double lambda = 6.0 * (2.0 * spec.attachment_bias - 1.0);
  for (Vertex v = k + 1; v < n; ++v) {
    std::size_t m = cliques.size();
    std::size_t pick = 0;
    if (lambda == 0.0) {
      pick = static_cast<std::size_t>(rng() % m);
    } else {
      std::vector<double> cum(m);
      double denom = m > 1 ? static_cast<double>(m - 1) : 1.0;
      double total = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        total += std::exp(lambda * (static_cast<double>(i) / denom));
        cum[i] = total;
      }
      double x = unit() * total;
      pick = static_cast<std::size_t>(std::lower_bound(cum.begin(), cum.end(), x) - cum.begin());
      if (pick >= m) pick = m - 1;
    }
    const std::vector<Vertex> host = cliques[pick];
    order.push_back(v);
    for (Vertex w : host) edges.emplace_back(v, w);
    for (int skip = k - 1; skip >= 0; --skip) {
      std::vector<Vertex> q;
      for (int i = 0; i < k; ++i)
        if (i != skip) q.push_back(host[i]);
      q.push_back(v);
      std::sort(q.begin(), q.end());
      cliques.push_back(std::move(q));
    }
  }
  Graph g = build_graph(n, edges);
  AdditionOrdering ao = ordering_from_vertices(g, k, order);
  return {std::move(g), std::move(ao)};
}

// The k-tree that is not odd (k+1)-colorable: a (k+1)-clique {v_1..v_k, u_0}
// plus vertices u_1..u_k where u_j misses exactly v_j among the v's. Vertices
// are numbered v_i = i-1, u_0 = k, u_j = k+j.
inline Graph lower_bound_construction(int k) {
  require(k >= 1, "construction needs k >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a <= k; ++a)
    for (Vertex b = 0; b < a; ++b) edges.emplace_back(a, b);
  for (int j = 1; j <= k; ++j) {
    Vertex uj = k + j;
    for (int i = 1; i <= k; ++i)
      if (i != j) edges.emplace_back(uj, i - 1);
    edges.emplace_back(uj, k);
  }
  return build_graph(2 * k + 1, edges);
}

// The proper (k+1)-coloring of the construction under which u_0 has no odd
// color class (every class meets its neighborhood twice).
inline Coloring lower_bound_bad_coloring(int k) {
  Coloring c;
  c.palette = k + 1;
  c.color.assign(2 * k + 1, 0);
  for (int i = 1; i <= k; ++i) {
    c.color[i - 1] = i;      // v_i
    c.color[k + i] = i;      // u_i
  }
  c.color[k] = k + 1;        // u_0
  return c;
}

// Uniformly random proper coloring: random vertex order, random allowed color.
inline Coloring random_proper_coloring(const Graph& g, int palette, std::uint64_t seed) {
  int need = 1;
  for (Vertex v = 0; v < g.n; ++v) need = std::max(need, g.degree(v) + 1);
  require(palette >= need, "greedy proper coloring needs palette > max degree");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(g.n);
  for (Vertex v = 0; v < g.n; ++v) order[v] = v;
  for (int i = g.n - 1; i > 0; --i)
    std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
  Coloring c;
  c.palette = palette;
  c.color.assign(g.n, 0);
  std::vector<char> used(palette + 1, 0);
  for (Vertex v : order) {
    for (Vertex w : g.adj[v]) used[c.color[w]] = 1;
    std::vector<int> free_colors;
    for (int col = 1; col <= palette; ++col)
      if (!used[col]) free_colors.push_back(col);
    for (Vertex w : g.adj[v]) used[c.color[w]] = 0;
    c.color[v] = free_colors[rng() % free_colors.size()];
  }
  return c;
}

// ---------------------------------------------------------------------------
// Canonical labeling for small graphs (n <= 24): iterated neighborhood
// refinement, then a cell-respecting search for the lexicographically smallest
// adjacency matrix.
// ---------------------------------------------------------------------------

namespace detail {

struct CanonSearch {
  const Graph& g;
  int n;
  std::vector<std::uint32_t> adjbits;      // over original ids
  std::vector<std::vector<Vertex>> cells;  // refined partition in invariant order
  std::vector<int> cell_at;                // position -> cell index
  std::vector<Vertex> lab;                 // position -> original vertex
  std::vector<char> used;
  std::vector<std::uint32_t> rows, best;   // row d: adjacency bits to positions < d
  bool have_best = false;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n) {}

  void run() {
    adjbits.assign(n, 0);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : g.adj[v]) adjbits[v] |= (std::uint32_t{1} << w);
    // refinement: color by degree, then repeatedly by the sorted multiset of
    // neighbor colors, re-indexing colors by sorted signature
    std::vector<int> color(n);
    for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < n; ++round) {
      std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
      for (Vertex v = 0; v < n; ++v) {
        std::vector<int> s{color[v]};
        for (Vertex w : g.adj[v]) s.push_back(color[w]);
        std::sort(s.begin() + 1, s.end());
        sig[v] = {std::move(s), v};
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> next(n);
      int cls = -1;
      const std::vector<int>* prev = nullptr;
      for (auto& [s, v] : sorted) {
        if (!prev || *prev != s) ++cls;
        prev = &s;
        next[v] = cls;
      }
      bool changed = next != color;
      color = std::move(next);
      if (!changed) break;
    }
    int num_cells = 0;
    for (Vertex v = 0; v < n; ++v) num_cells = std::max(num_cells, color[v] + 1);
    cells.assign(num_cells, {});
    for (Vertex v = 0; v < n; ++v) cells[color[v]].push_back(v);
    cell_at.assign(n, 0);
    int p = 0;
    for (int c = 0; c < num_cells; ++c)
      for (std::size_t i = 0; i < cells[c].size(); ++i) cell_at[p++] = c;
    lab.assign(n, -1);
    used.assign(n, 0);
    rows.assign(n, 0);
    dfs(0, true);
  }

  void dfs(int d, bool tight) {
    if (d == n) {
      if (!have_best || rows < best) {
        best = rows;
        have_best = true;
      }
      return;
    }
    for (Vertex v : cells[cell_at[d]]) {
      if (used[v]) continue;
      std::uint32_t row = 0;
      for (int q = 0; q < d; ++q)
        if (adjbits[v] & (std::uint32_t{1} << lab[q])) row |= (std::uint32_t{1} << q);
      bool t = tight;
      if (have_best && t) {
        if (row > best[d]) continue;
        if (row < best[d]) t = false;
      }
      used[v] = 1;
      lab[d] = v;
      rows[d] = row;
      dfs(d + 1, t);
      used[v] = 0;
    }
  }
};

}  // namespace detail

// Canonical key: equal keys iff isomorphic (exact for n <= 24).
inline std::vector<std::uint32_t> canonical_form(const Graph& g) {
  require(g.n <= 24, "canonical labeling is for small graphs only");
  if (g.n == 0) return {0};
  detail::CanonSearch cs(g);
  cs.run();
  std::vector<std::uint32_t> key;
  key.push_back(static_cast<std::uint32_t>(g.n));
  key.insert(key.end(), cs.best.begin(), cs.best.end());
  return key;
}

// All k-trees on exactly n vertices up to isomorphism, by breadth-first
// extension of addition sequences with canonical deduplication per level.
inline std::vector<Graph> enumerate_small_ktrees(int n, int k) {
  require(k >= 1 && n >= k + 1, "enumeration needs n >= k+1");
  require(n <= 16, "enumeration is meant for desk-scale n");
  std::vector<std::pair<Vertex, Vertex>> base_edges;
  for (Vertex a = 0; a <= k; ++a)
    for (Vertex b = 0; b < a; ++b) base_edges.emplace_back(a, b);
  std::vector<Graph> level{build_graph(k + 1, base_edges)};
  for (int sz = k + 2; sz <= n; ++sz) {
    std::vector<Graph> next;
    std::vector<std::vector<std::uint32_t>> seen;
    for (const Graph& g : level) {
      // enumerate all k-cliques of g
      std::vector<std::vector<Vertex>> cliques;
      std::vector<Vertex> cur;
      auto grow = [&](auto&& self, Vertex from) -> void {
        if (static_cast<int>(cur.size()) == k) {
          cliques.push_back(cur);
          return;
        }
        for (Vertex v = from; v < g.n; ++v) {
          bool ok = true;
          for (Vertex u : cur)
            if (!g.has_edge(u, v)) {
              ok = false;
              break;
            }
          if (!ok) continue;
          cur.push_back(v);
          self(self, v + 1);
          cur.pop_back();
        }
      };
      grow(grow, 0);
      for (const auto& q : cliques) {
        auto edges = g.edges();
        for (Vertex w : q) edges.emplace_back(g.n, w);
        Graph h = build_graph(g.n + 1, edges);
        auto key = canonical_form(h);
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
          seen.push_back(std::move(key));
          next.push_back(std::move(h));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace oddkt
