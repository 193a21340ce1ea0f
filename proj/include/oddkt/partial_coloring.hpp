#pragma once

#include <array>

#include "oddkt/trace.hpp"
#include "oddkt/verify.hpp"

namespace oddkt {

// Partial coloring with a per-vertex parity mask: bit c-1 of odd_mask[v] is the
// parity of color c among v's colored neighbors. A vertex is witnessed (with
// respect to what has been colored so far) iff its mask is nonzero.
struct PartialColoring {
  const Graph* g = nullptr;
  int palette = 0;
  std::vector<int> color;               // 0 = unset
  std::vector<std::uint64_t> odd_mask;

  PartialColoring() = default;
  PartialColoring(const Graph& graph, int pal) : g(&graph), palette(pal) {
    require(pal >= 1 && pal <= 64, "palette must fit in the parity mask");
    color.assign(graph.n, 0);
    odd_mask.assign(graph.n, 0);
  }

  static std::uint64_t bit(int c) { return std::uint64_t{1} << (c - 1); }

  bool colored(Vertex v) const { return color[v] != 0; }
  bool witnessed(Vertex v) const { return odd_mask[v] != 0; }

  bool proper_ok(Vertex v, int c) const {
    for (Vertex w : g->adj[v])
      if (color[w] == c) return false;
    return true;
  }

  void assign(Vertex v, int c) {
    require(c >= 1 && c <= palette, "color out of palette");
    require(!colored(v), "vertex is already colored");
    require(proper_ok(v, c), "assignment would clash with a colored neighbor of " +
                                 std::to_string(v));
    color[v] = c;
    for (Vertex w : g->adj[v]) odd_mask[w] ^= bit(c);
  }

  void unassign(Vertex v) {
    require(colored(v), "vertex is not colored");
    for (Vertex w : g->adj[v]) odd_mask[w] ^= bit(color[v]);
    color[v] = 0;
  }

  // Does x stay witnessed if a new neighbor of it takes color c? Exactly one
  // color class flips parity, so x objects only when its single odd class is c.
  bool ok_after_neighbor(Vertex x, int c) const { return odd_mask[x] != bit(c); }

  // Recompute all masks from the colors (used after renaming colors).
  void rebuild_masks() {
    std::fill(odd_mask.begin(), odd_mask.end(), 0);
    for (Vertex v = 0; v < g->n; ++v)
      if (color[v])
        for (Vertex w : g->adj[v]) odd_mask[w] ^= bit(color[v]);
  }

  // Rename colors by a permutation perm of [1, palette] (perm[c] replaces c).
  void apply_permutation(const std::vector<int>& perm) {
    for (Vertex v = 0; v < g->n; ++v)
      if (color[v]) color[v] = perm[color[v]];
    rebuild_masks();
  }

  Coloring finish() const {
    for (Vertex v = 0; v < g->n; ++v)
      require(colored(v), "finish() needs a total coloring; vertex " + std::to_string(v) +
                              " is unset");
    Coloring c;
    c.palette = palette;
    c.color = color;
    return c;
  }
};

// Pick the smallest candidate color for v that keeps every vertex of `fix`
// witnessed among colored neighbors, and assign it. Each fix vertex adjacent to
// v rules out at most one candidate; non-neighbors only need a nonzero mask.
inline int choose_color_avoiding(PartialColoring& pc, Vertex v, const std::vector<int>& candidates,
                                 const std::vector<Vertex>& fix) {
  for (int c : candidates) {
    if (!pc.proper_ok(v, c)) continue;
    bool good = true;
    for (Vertex x : fix) {
      bool adj = pc.g->has_edge(v, x);
      if (adj ? !pc.ok_after_neighbor(x, c) : !pc.witnessed(x)) {
        good = false;
        break;
      }
    }
    if (good) {
      pc.assign(v, c);
      for (Vertex x : fix)
        require(pc.witnessed(x), "chosen color failed to keep a vertex witnessed");
      return c;
    }
  }
  throw InvariantViolation("no candidate color keeps the constrained vertices witnessed at vertex " +
                           std::to_string(v));
}

// Assign a pair of vertices from a short list of color pairs so that every
// vertex of `fix` ends up witnessed. Used where a construction fixes two root
// vertices at once.
inline std::pair<int, int> choose_pair_avoiding(PartialColoring& pc, Vertex x, Vertex y,
                                                const std::vector<std::pair<int, int>>& pairs,
                                                const std::vector<Vertex>& fix) {
  for (auto [cx, cy] : pairs) {
    if (!pc.proper_ok(x, cx)) continue;
    pc.assign(x, cx);
    if (!pc.proper_ok(y, cy)) {
      pc.unassign(x);
      continue;
    }
    pc.assign(y, cy);
    bool good = true;
    for (Vertex f : fix)
      if (!pc.witnessed(f)) {
        good = false;
        break;
      }
    if (good) return {cx, cy};
    pc.unassign(y);
    pc.unassign(x);
  }
  throw InvariantViolation("no color pair keeps the constrained vertices witnessed");
}

// Recipe-color mapping for extensions: recipe colors 1..|root| are the current
// root colors, the remaining recipe colors map to the unused palette colors in
// ascending order.
struct ColorMap {
  std::array<int, 8> to_actual{};
  int map(int recipe) const { return to_actual[recipe]; }
  std::vector<int> map_all(std::initializer_list<int> recipe) const {
    std::vector<int> out;
    for (int r : recipe) out.push_back(to_actual[r]);
    return out;
  }
};

inline ColorMap make_color_map(const PartialColoring& pc, const std::vector<Vertex>& root) {
  ColorMap m;
  std::uint64_t used = 0;
  int idx = 1;
  for (Vertex r : root) {
    require(pc.colored(r), "extension root must be colored");
    int c = pc.color[r];
    require(!(used & PartialColoring::bit(c)), "extension root colors must be distinct");
    used |= PartialColoring::bit(c);
    m.to_actual[idx++] = c;
  }
  for (int c = 1; c <= pc.palette && idx < 8; ++c)
    if (!(used & PartialColoring::bit(c))) m.to_actual[idx++] = c;
  return m;
}

// Rename colors so the listed vertices take colors 1,2,... in order, filling the
// remaining colors ascending; records the move on the trace.
inline void normalize_root_colors(PartialColoring& pc, const std::vector<Vertex>& roots,
                                  Trace* tr) {
  std::vector<int> perm(pc.palette + 1, 0);
  std::vector<char> taken(pc.palette + 1, 0);
  int next = 1;
  for (Vertex r : roots) {
    require(pc.colored(r), "frame root must be colored before normalization");
    require(perm[pc.color[r]] == 0, "frame roots must hold distinct colors");
    perm[pc.color[r]] = next;
    taken[next++] = 1;
  }
  next = 1;
  for (int c = 1; c <= pc.palette; ++c) {
    if (perm[c]) continue;
    while (taken[next]) ++next;
    perm[c] = next;
    taken[next++] = 1;
  }
  pc.apply_permutation(perm);
  if (tr) {
    std::ostringstream os;
    os << "  perm=";
    for (int c = 1; c <= pc.palette; ++c) os << (c > 1 ? "," : "") << c << ">" << perm[c];
    tr->line(os.str());
  }
}

// After a reduction frame is replayed, the coloring restricted to the colored
// set must again be proper and odd; this is the induction invariant every level
// hands to the next.
inline void assert_level_odd(const PartialColoring& pc, const std::string& where) {
  for (Vertex v = 0; v < pc.g->n; ++v) {
    if (!pc.colored(v)) continue;
    bool any_colored_nb = false;
    for (Vertex w : pc.g->adj[v])
      if (pc.colored(w)) {
        any_colored_nb = true;
        break;
      }
    if (any_colored_nb)
      require(pc.witnessed(v),
              where + ": vertex " + std::to_string(v) + " lost its odd witness");
  }
}

}  // namespace oddkt
