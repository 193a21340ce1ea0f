#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddkt {

using Vertex = int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BuildError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct TooSmall : Error {
  using Error::Error;
};
struct NotKTree : Error {
  using Error::Error;
};
struct NotProper : Error {
  using Error::Error;
};
// A structural fact the algorithms rely on failed to hold. Means a bug, not bad input.
struct InvariantViolation : Error {
  using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvariantViolation(msg);
}

// Simple undirected graph. Neighbor lists are strictly increasing, which makes
// equality tests and serialized output canonical.
struct Graph {
  int n = 0;
  std::vector<std::vector<Vertex>> adj;
  bool collapsed_duplicates = false;

  int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }

  bool has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    Vertex w = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
  }

  long long edge_count() const {
    long long m = 0;
    for (const auto& a : adj) m += static_cast<long long>(a.size());
    return m / 2;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : adj[u])
        if (u < v) es.emplace_back(u, v);
    return es;
  }

  bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

inline Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list) {
  if (n < 0) throw BuildError("vertex count must be non-negative");
  Graph g;
  g.n = n;
  g.adj.assign(n, {});
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw BuildError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw BuildError("self-loop at vertex " + std::to_string(u));
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    auto last = std::unique(a.begin(), a.end());
    if (last != a.end()) {
      g.collapsed_duplicates = true;
      a.erase(last, a.end());
    }
  }
  return g;
}

inline bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.has_edge(vs[i], vs[j])) return false;
  return true;
}

inline std::vector<Vertex> intersect_sorted(const std::vector<Vertex>& a,
                                            const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  return intersect_sorted(g.adj[u], g.adj[v]);
}

inline std::vector<Vertex> common_neighbors(const Graph& g, const std::vector<Vertex>& vs) {
  if (vs.empty()) return {};
  std::vector<Vertex> cur = g.adj[vs[0]];
  for (std::size_t i = 1; i < vs.size(); ++i) cur = intersect_sorted(cur, g.adj[vs[i]]);
  return cur;
}

// Induced subgraph with the old->new and new->old vertex maps.
struct Induced {
  Graph g;
  std::vector<Vertex> origin;  // sub id -> original id
  std::vector<int> to_sub;     // original id -> sub id, -1 if absent
};

inline Induced induced_subgraph(const Graph& g, std::vector<Vertex> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  Induced res;
  res.origin = verts;
  res.to_sub.assign(g.n, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) res.to_sub[verts[i]] = static_cast<int>(i);
  res.g.n = static_cast<int>(verts.size());
  res.g.adj.assign(res.g.n, {});
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (Vertex w : g.adj[verts[i]])
      if (res.to_sub[w] >= 0) res.g.adj[i].push_back(res.to_sub[w]);
  }
  return res;
}

// Connected component of `start` in g - removed.
inline std::vector<Vertex> component_avoiding(const Graph& g, Vertex start,
                                              const std::vector<Vertex>& removed) {
  std::vector<char> blocked(g.n, 0), seen(g.n, 0);
  for (Vertex v : removed) blocked[v] = 1;
  require(!blocked[start], "component start vertex is removed");
  std::vector<Vertex> stack{start}, comp;
  seen[start] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    comp.push_back(v);
    for (Vertex w : g.adj[v])
      if (!blocked[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

// ---- plain-text format: first line "n m", then m lines "u v"; '#' comments allowed ----

inline Graph parse_graph(std::istream& in) {
  std::string line;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream probe(line);
      std::string tok;
      if (probe >> tok) {
        out = line;
        return true;
      }
    }
    return false;
  };
  std::string head;
  if (!next_data_line(head)) throw ParseError("graph: missing header line \"n m\"");
  std::istringstream hs(head);
  long long n = -1, m = -1;
  if (!(hs >> n >> m) || n < 0 || m < 0) throw ParseError("graph: bad header line \"" + head + "\"");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    std::string el;
    if (!next_data_line(el)) throw ParseError("graph: expected " + std::to_string(m) + " edges");
    std::istringstream es(el);
    long long u, v;
    if (!(es >> u >> v)) throw ParseError("graph: bad edge line \"" + el + "\"");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return build_graph(static_cast<int>(n), edges);
  } catch (const BuildError& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

inline void format_graph(std::ostream& out, const Graph& g) {
  out << g.n << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline Graph parse_graph_string(const std::string& s) {
  std::istringstream in(s);
  return parse_graph(in);
}

inline std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  format_graph(out, g);
  return out.str();
}

}  // namespace oddkt
