#pragma once

#include <optional>
#include <set>

#include "oddkt/graph.hpp"

namespace oddkt {

// Certificate that a graph is a k-tree: order[0..k] induces K_{k+1} and every
// later vertex sees exactly k earlier neighbors forming a clique. Positions are
// 0-based throughout; back_cliques[p] is the sorted set of earlier neighbors of
// order[p] (it has size k exactly for p >= k+1, the added vertices).
struct AdditionOrdering {
  int k = 0;
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> back_cliques;
};

inline Graph replay_addition_ordering(const AdditionOrdering& ao) {
  int n = static_cast<int>(ao.order.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int p = 0; p <= ao.k && p < n; ++p)
    for (int q = 0; q < p; ++q) edges.emplace_back(ao.order[p], ao.order[q]);
  for (int p = ao.k + 1; p < n; ++p)
    for (Vertex w : ao.back_cliques[p]) edges.emplace_back(ao.order[p], w);
  return build_graph(n, edges);
}

inline void validate_addition_ordering(const Graph& g, const AdditionOrdering& ao) {
  int n = g.n, k = ao.k;
  require(k >= 1, "addition ordering needs k >= 1");
  require(static_cast<int>(ao.order.size()) == n, "ordering must list every vertex");
  require(static_cast<int>(ao.back_cliques.size()) == n, "ordering must carry all back cliques");
  std::vector<int> pos(n, -1);
  for (int p = 0; p < n; ++p) {
    Vertex v = ao.order[p];
    require(v >= 0 && v < n && pos[v] < 0, "ordering must be a permutation of the vertices");
    pos[v] = p;
  }
  require(n >= k + 1, "a k-tree has at least k+1 vertices");
  std::vector<Vertex> base(ao.order.begin(), ao.order.begin() + k + 1);
  require(is_clique(g, base), "the first k+1 vertices must induce a complete graph");
  for (int p = 0; p < n; ++p) {
    Vertex v = ao.order[p];
    std::vector<Vertex> back;
    for (Vertex w : g.adj[v])
      if (pos[w] < p) back.push_back(w);
    std::sort(back.begin(), back.end());
    require(back == ao.back_cliques[p], "stored back clique must match the graph");
    if (p >= k + 1) {
      require(static_cast<int>(back.size()) == k, "every added vertex sees exactly k earlier neighbors");
      require(is_clique(g, back), "earlier neighbors of an added vertex must form a clique");
    }
  }
  // Replaying the ordering must rebuild the graph edge for edge.
  require(replay_addition_ordering(ao) == g, "replaying the ordering must rebuild the graph");
}

namespace detail {

inline std::vector<std::vector<Vertex>> back_cliques_for(const Graph& g,
                                                         const std::vector<Vertex>& order) {
  std::vector<int> pos(g.n, -1);
  for (int p = 0; p < static_cast<int>(order.size()); ++p) pos[order[p]] = p;
  std::vector<std::vector<Vertex>> bc(order.size());
  for (int p = 0; p < static_cast<int>(order.size()); ++p) {
    for (Vertex w : g.adj[order[p]])
      if (pos[w] >= 0 && pos[w] < p) bc[p].push_back(w);
    std::sort(bc[p].begin(), bc[p].end());
  }
  return bc;
}

// True iff the alive neighborhood of v is a clique.
inline bool simplicial_in(const Graph& g, const std::vector<char>& alive, Vertex v) {
  std::vector<Vertex> nb;
  for (Vertex w : g.adj[v])
    if (alive[w]) nb.push_back(w);
  return is_clique(g, nb);
}

}  // namespace detail

// Recognition by repeatedly removing a simplicial vertex of degree exactly k
// (smallest id first) until K_{k+1} remains; the removal order reversed is an
// addition ordering. A degree-k vertex that fails the clique test can never
// become removable later (its degree only drops below k), so one pass decides.
inline std::optional<AdditionOrdering> try_recognize_ktree(const Graph& g, int k,
                                                           std::string* reason = nullptr) {
  auto fail = [&](const std::string& why) -> std::optional<AdditionOrdering> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  if (k < 1) return fail("k must be at least 1");
  if (g.n < k + 1) return fail("too small: a k-tree needs at least k+1 vertices");
  std::vector<char> alive(g.n, 1);
  std::vector<int> deg(g.n);
  std::set<Vertex> candidates;  // alive, degree exactly k, not yet tried
  for (Vertex v = 0; v < g.n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == k) candidates.insert(v);
  }
  int alive_count = g.n;
  std::vector<Vertex> removed;
  while (alive_count > k + 1) {
    std::optional<Vertex> pick;
    while (!candidates.empty()) {
      Vertex v = *candidates.begin();
      candidates.erase(candidates.begin());
      if (detail::simplicial_in(g, alive, v)) {
        pick = v;
        break;
      }
    }
    if (!pick)
      return fail("no simplicial vertex of degree " + std::to_string(k) + " with " +
                  std::to_string(alive_count) + " vertices left");
    Vertex v = *pick;
    alive[v] = 0;
    --alive_count;
    removed.push_back(v);
    for (Vertex w : g.adj[v]) {
      if (!alive[w]) continue;
      if (deg[w] == k) candidates.erase(w);
      --deg[w];
      if (deg[w] == k) candidates.insert(w);
    }
  }
  std::vector<Vertex> base;
  for (Vertex v = 0; v < g.n; ++v)
    if (alive[v]) base.push_back(v);
  if (!is_clique(g, base)) return fail("residue after removals is not a complete graph");
  for (Vertex v : base)
    if (deg[v] != k) return fail("residue after removals is not K_{k+1}");
  AdditionOrdering ao;
  ao.k = k;
  ao.order = base;
  ao.order.insert(ao.order.end(), removed.rbegin(), removed.rend());
  ao.back_cliques = detail::back_cliques_for(g, ao.order);
  validate_addition_ordering(g, ao);
  return ao;
}

inline AdditionOrdering recognize_ktree(const Graph& g, int k) {
  if (g.n < k + 1)
    throw TooSmall("graph has " + std::to_string(g.n) + " vertices, a " + std::to_string(k) +
                   "-tree needs at least " + std::to_string(k + 1));
  std::string why;
  auto ao = try_recognize_ktree(g, k, &why);
  if (!ao) throw NotKTree("not a " + std::to_string(k) + "-tree: " + why);
  return *ao;
}

// Addition ordering whose first vertex has degree exactly k in g. Construction:
// pick a simplicial vertex s of degree k and eliminate simplicial degree-k
// vertices outside N[s] until only N[s] remains; reversed, with s first. The
// elimination is backtracking over the choice of removed vertex, although for a
// k-tree the greedy first choice always goes through.
inline AdditionOrdering good_addition_ordering(const Graph& g, int k) {
  AdditionOrdering plain = recognize_ktree(g, k);
  if (g.n == k + 1) return plain;  // every vertex has degree k

  Vertex s = -1;
  std::vector<char> all_alive(g.n, 1);
  for (Vertex v = 0; v < g.n && s < 0; ++v)
    if (g.degree(v) == k && detail::simplicial_in(g, all_alive, v)) s = v;
  require(s >= 0, "a k-tree with more than k+1 vertices has a simplicial degree-k vertex");

  std::vector<char> keep(g.n, 0);
  keep[s] = 1;
  for (Vertex w : g.adj[s]) keep[w] = 1;

  std::vector<char> alive(g.n, 1);
  std::vector<int> deg(g.n);
  for (Vertex v = 0; v < g.n; ++v) deg[v] = g.degree(v);

  struct Step {
    std::vector<Vertex> options;
    std::size_t next = 0;
    Vertex taken = -1;
  };
  auto options_now = [&]() {
    std::vector<Vertex> opts;
    for (Vertex v = 0; v < g.n; ++v)
      if (alive[v] && !keep[v] && deg[v] == k && detail::simplicial_in(g, alive, v))
        opts.push_back(v);
    return opts;
  };
  auto remove_vertex = [&](Vertex v) {
    alive[v] = 0;
    for (Vertex w : g.adj[v])
      if (alive[w]) --deg[w];
  };
  auto restore_vertex = [&](Vertex v) {
    for (Vertex w : g.adj[v])
      if (alive[w]) ++deg[w];
    alive[v] = 1;
  };

  int alive_count = g.n;
  std::vector<Step> stack;
  stack.push_back({options_now(), 0, -1});
  while (alive_count > k + 1) {
    Step& top = stack.back();
    if (top.next >= top.options.size()) {
      require(stack.size() > 1,
              "elimination stalled with no alternatives; contradicts the good-ordering guarantee");
      stack.pop_back();
      restore_vertex(stack.back().taken);
      ++alive_count;
      continue;
    }
    Vertex v = top.options[top.next++];
    top.taken = v;
    remove_vertex(v);
    --alive_count;
    stack.push_back({options_now(), 0, -1});
  }

  AdditionOrdering ao;
  ao.k = k;
  ao.order.push_back(s);
  for (Vertex w : g.adj[s]) ao.order.push_back(w);
  for (auto it = stack.rbegin(); it != stack.rend(); ++it)
    if (it->taken >= 0) ao.order.push_back(it->taken);
  require(static_cast<int>(ao.order.size()) == g.n, "good ordering must cover all vertices");
  ao.back_cliques = detail::back_cliques_for(g, ao.order);
  validate_addition_ordering(g, ao);
  require(g.degree(ao.order[0]) == k, "good ordering must start at a degree-k vertex");
  return ao;
}

// Detect k from the edge count (a k-tree on n vertices has kn - k(k+1)/2 edges)
// and verify by recognition.
inline std::optional<int> detect_ktree_k(const Graph& g) {
  for (int k = 1; k <= g.n - 1; ++k) {
    long long expect = static_cast<long long>(k) * g.n - static_cast<long long>(k) * (k + 1) / 2;
    if (g.edge_count() == expect && try_recognize_ktree(g, k)) return k;
  }
  return std::nullopt;
}

// ---- ordering certificate format: one line of n space-separated vertex ids ----

inline std::vector<Vertex> parse_ordering_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<Vertex> order;
    long long v;
    while (ls >> v) order.push_back(static_cast<Vertex>(v));
    if (!order.empty()) return order;
  }
  throw ParseError("ordering: no ids found");
}

inline void format_ordering(std::ostream& out, const AdditionOrdering& ao) {
  for (std::size_t i = 0; i < ao.order.size(); ++i)
    out << (i ? " " : "") << ao.order[i];
  out << '\n';
}

inline AdditionOrdering ordering_from_vertices(const Graph& g, int k, std::vector<Vertex> order) {
  AdditionOrdering ao;
  ao.k = k;
  ao.order = std::move(order);
  ao.back_cliques = detail::back_cliques_for(g, ao.order);
  validate_addition_ordering(g, ao);
  return ao;
}

}  // namespace oddkt
