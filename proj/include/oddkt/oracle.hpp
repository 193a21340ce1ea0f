#pragma once

#include <limits>
#include <optional>

#include "oddkt/verify.hpp"

namespace oddkt {

struct SearchConfig {
  std::optional<std::uint64_t> node_budget;  // cap on assignments tried
  bool symmetry_breaking = true;             // pre-color one maximal clique
};

enum class OracleStatus { Feasible, Infeasible, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::Infeasible;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
};

namespace detail {

// Greedy maximal clique, deterministic: grow from the max-degree vertex,
// always taking the smallest extendable vertex.
inline std::vector<Vertex> greedy_maximal_clique(const Graph& g) {
  if (g.n == 0) return {};
  Vertex seed = 0;
  for (Vertex v = 1; v < g.n; ++v)
    if (g.degree(v) > g.degree(seed)) seed = v;
  std::vector<Vertex> clique{seed};
  for (Vertex v = 0; v < g.n; ++v) {
    if (v == seed) continue;
    bool ok = true;
    for (Vertex u : clique)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

// Peel minimum-degree vertices (smallest id first); reversed, every vertex sees
// few earlier neighbors and, in a k-tree, a clique of them.
inline std::vector<Vertex> degeneracy_order_reversed(const Graph& g) {
  std::vector<int> deg(g.n);
  std::vector<char> alive(g.n, 1);
  for (Vertex v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  std::vector<Vertex> peel;
  for (int step = 0; step < g.n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < g.n; ++v)
      if (alive[v] && (best < 0 || deg[v] < deg[best])) best = v;
    alive[best] = 0;
    peel.push_back(best);
    for (Vertex w : g.adj[best])
      if (alive[w]) --deg[w];
  }
  std::reverse(peel.begin(), peel.end());
  return peel;
}

struct OddSearch {
  const Graph& g;
  int palette;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  std::vector<int> color;
  std::vector<std::uint64_t> parity;    // parity mask over colored neighbors
  std::vector<int> uncolored_nbrs;
  std::vector<Vertex> order;

  OddSearch(const Graph& graph, int pal, std::uint64_t cap)
      : g(graph), palette(pal), budget(cap) {
    color.assign(g.n, 0);
    parity.assign(g.n, 0);
    uncolored_nbrs.assign(g.n, 0);
    for (Vertex v = 0; v < g.n; ++v) uncolored_nbrs[v] = g.degree(v);
  }

  static std::uint64_t bit(int c) { return std::uint64_t{1} << (c - 1); }

  // Assign and check the odd condition at every vertex whose neighborhood just
  // became fully colored (sound: a complete even neighborhood can never gain a
  // witness later).
  bool assign(Vertex v, int c) {
    color[v] = c;
    bool ok = true;
    for (Vertex w : g.adj[v]) {
      parity[w] ^= bit(c);
      --uncolored_nbrs[w];
      if (color[w] && uncolored_nbrs[w] == 0 && parity[w] == 0) ok = false;
    }
    if (uncolored_nbrs[v] == 0 && parity[v] == 0 && g.degree(v) > 0) ok = false;
    return ok;
  }

  void unassign(Vertex v) {
    int c = color[v];
    color[v] = 0;
    for (Vertex w : g.adj[v]) {
      parity[w] ^= bit(c);
      ++uncolored_nbrs[w];
    }
  }

  bool proper_ok(Vertex v, int c) const {
    for (Vertex w : g.adj[v])
      if (color[w] == c) return false;
    return true;
  }

  bool dfs(std::size_t idx) {
    if (idx == order.size()) return true;
    Vertex v = order[idx];
    for (int c = 1; c <= palette; ++c) {
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      if (!proper_ok(v, c)) continue;
      bool viable = assign(v, c);
      if (viable && dfs(idx + 1)) return true;
      unassign(v);
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace detail

// Complete search for an odd coloring with `colors` colors (when the budget is
// not exceeded). Colors vertices in reverse degeneracy order and prunes on
// properness plus the completed-neighborhood parity test.
inline OracleResult exists_odd_coloring(const Graph& g, int colors, const SearchConfig& cfg = {}) {
  OracleResult res;
  if (colors < 1 || colors > 64) {
    res.status = OracleStatus::Infeasible;
    return res;
  }
  if (g.n == 0) {
    res.status = OracleStatus::Feasible;
    res.witness = Coloring{colors, {}};
    return res;
  }
  std::uint64_t budget = cfg.node_budget.value_or(std::numeric_limits<std::uint64_t>::max());
  detail::OddSearch search(g, colors, budget);

  std::vector<char> placed(g.n, 0);
  std::vector<Vertex> clique;
  if (cfg.symmetry_breaking) {
    clique = detail::greedy_maximal_clique(g);
    if (static_cast<int>(clique.size()) > colors) {
      res.status = OracleStatus::Infeasible;  // a clique forces that many colors
      return res;
    }
  }
  search.order = clique;
  for (Vertex v : clique) placed[v] = 1;
  for (Vertex v : detail::degeneracy_order_reversed(g))
    if (!placed[v]) search.order.push_back(v);

  // Color names are interchangeable, so pinning the clique keeps completeness.
  bool clique_viable = true;
  for (std::size_t i = 0; i < clique.size(); ++i)
    clique_viable = search.assign(clique[i], static_cast<int>(i + 1)) && clique_viable;

  bool found = clique_viable && search.dfs(clique.size());
  res.nodes = search.nodes;
  if (found) {
    res.status = OracleStatus::Feasible;
    Coloring c;
    c.palette = colors;
    c.color = search.color;
    require(is_odd_coloring(g, c), "oracle witness must verify");
    res.witness = std::move(c);
  } else if (search.out_of_budget) {
    res.status = OracleStatus::BudgetExceeded;
  } else {
    res.status = OracleStatus::Infeasible;
  }
  return res;
}

struct ChromaticResult {
  int lo = 1;                       // smallest palette not proven infeasible
  int hi = 0;                       // smallest palette proven feasible
  bool exact = false;               // lo == hi and no budget gap below
  std::optional<Coloring> witness;  // witness at hi
  std::uint64_t nodes = 0;
};

// Smallest palette admitting an odd coloring. With a node budget the result
// may degrade to a bounded interval [lo, hi].
inline ChromaticResult odd_chromatic_exact(const Graph& g, const SearchConfig& cfg = {}) {
  require(g.n >= 1, "odd chromatic number needs a nonempty graph");
  ChromaticResult out;
  bool gap = false;
  for (int c = 1; c <= g.n; ++c) {
    OracleResult r = exists_odd_coloring(g, c, cfg);
    out.nodes += r.nodes;
    if (r.status == OracleStatus::Feasible) {
      out.hi = c;
      out.witness = std::move(r.witness);
      out.exact = !gap;
      if (!gap) out.lo = c;
      return out;
    }
    if (r.status == OracleStatus::Infeasible && !gap) out.lo = c + 1;
    if (r.status == OracleStatus::BudgetExceeded) gap = true;
  }
  // A complete search finds the all-distinct coloring by c = n, so only a
  // budget gap can land here; all-distinct colors close the interval on top.
  if (!gap) throw InvariantViolation("complete odd chromatic search missed the trivial bound");
  out.hi = g.n;
  out.witness = all_distinct_coloring(g, g.n);
  out.exact = false;
  return out;
}

}  // namespace oddkt
