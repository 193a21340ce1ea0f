#pragma once

#include "oddkt/ordering.hpp"

namespace oddkt {

// Branch B(V,u): the subgraph induced by a k-clique V (the root) together with
// the component of G - V containing the apex u.
struct Branch {
  std::vector<Vertex> root;      // ordered as given by the caller
  Vertex apex = -1;
  std::vector<Vertex> interior;  // sorted; contains apex
  std::vector<Vertex> vertices;  // sorted; root plus interior
};

struct RootNotClique : Error {
  using Error::Error;
};
struct ApexNotCommonNeighbor : Error {
  using Error::Error;
};

inline Branch extract_branch(const Graph& g, std::vector<Vertex> root, Vertex apex) {
  if (!is_clique(g, root)) throw RootNotClique("branch root does not induce a complete graph");
  for (Vertex v : root)
    if (!g.has_edge(apex, v))
      throw ApexNotCommonNeighbor("apex " + std::to_string(apex) +
                                  " is not adjacent to the whole root");
  Branch b;
  b.root = root;
  b.apex = apex;
  b.interior = component_avoiding(g, apex, root);
  b.vertices = b.interior;
  b.vertices.insert(b.vertices.end(), root.begin(), root.end());
  std::sort(b.vertices.begin(), b.vertices.end());
  return b;
}

// Interior ordering u_0..u_s of a branch taken from an addition ordering.
struct BranchOrdering {
  std::vector<Vertex> seq;  // u_0 = apex first, then by position in the ordering
};

// |V(B_p)| for every position p >= k (0-based), where B_p is the branch rooted
// at the back-clique of order[p] with apex order[p]. Uses the parent-pointer
// subtree identity: the interior of B_p is exactly the set of positions whose
// chain q -> max-position-in-back-clique(q) passes through p.
inline std::vector<int> branch_sizes_by_position(const AdditionOrdering& ao) {
  int n = static_cast<int>(ao.order.size());
  int k = ao.k;
  std::vector<int> pos(n, -1);
  for (int p = 0; p < n; ++p) pos[ao.order[p]] = p;
  std::vector<int> parent(n, -1), sub(n, 1);
  for (int p = k + 1; p < n; ++p) {
    int mx = -1;
    for (Vertex w : ao.back_cliques[p]) mx = std::max(mx, pos[w]);
    // a back clique inside the first k positions starts its own component, so
    // the chain ends there; otherwise it continues at the latest back neighbor
    parent[p] = mx;
  }
  for (int p = n - 1; p >= k + 1; --p)
    if (parent[p] >= k) sub[parent[p]] += sub[p];
  std::vector<int> size(n, 0);
  for (int p = k; p < n; ++p) size[p] = k + sub[p];
  return size;
}

// Branch at a position of an addition ordering, with the interior ordering and
// its three structural properties re-checked: (a) the apex comes first, (b)
// every later interior vertex sees exactly k earlier branch vertices, (c) the
// running intersection of root neighborhoods drops by at most one per step.
inline std::pair<Branch, BranchOrdering> branch_at_position(const Graph& g,
                                                            const AdditionOrdering& ao,
                                                            int p) {
  int n = g.n, k = ao.k;
  require(p >= k && p < n, "branch positions start at the base clique boundary");
  Vertex apex = ao.order[p];
  std::vector<Vertex> root = ao.back_cliques[p];
  require(static_cast<int>(root.size()) == k, "branch root must have k vertices");
  Branch b = extract_branch(g, root, apex);

  std::vector<int> pos(n, -1);
  for (int q = 0; q < n; ++q) pos[ao.order[q]] = q;
  BranchOrdering bo;
  bo.seq = b.interior;
  std::sort(bo.seq.begin(), bo.seq.end(), [&](Vertex a, Vertex c) { return pos[a] < pos[c]; });

  require(!bo.seq.empty() && bo.seq[0] == apex, "the apex must be the earliest interior vertex");
  std::vector<char> in_branch(n, 0), placed(n, 0);
  for (Vertex v : b.vertices) in_branch[v] = 1;
  for (Vertex v : root) placed[v] = 1;
  placed[apex] = 1;
  std::vector<Vertex> root_common = root;  // root ∩ N(u_1) ∩ ... ∩ N(u_j)
  for (std::size_t j = 1; j < bo.seq.size(); ++j) {
    Vertex u = bo.seq[j];
    int back = 0;
    for (Vertex w : g.adj[u])
      if (in_branch[w] && placed[w]) ++back;
    require(back == k, "interior vertex must see exactly k earlier branch vertices");
    placed[u] = 1;
    std::vector<Vertex> next;
    for (Vertex w : root_common)
      if (g.has_edge(u, w)) next.push_back(w);
    require(static_cast<int>(next.size()) >= static_cast<int>(root_common.size()) - 1,
            "running root intersection may drop by at most one per interior vertex");
    root_common = std::move(next);
  }
  return {std::move(b), std::move(bo)};
}

}  // namespace oddkt
