#pragma once

#include "oddkt/branch.hpp"
#include "oddkt/partial_coloring.hpp"

namespace oddkt {

struct ColorBudget {
  int k = 0;
  int r = 0;        // floor(log2 k) + 1
  int palette = 0;  // k + 2r + 1
};

inline ColorBudget make_budget(int k) {
  require(k >= 1, "budget needs k >= 1");
  int r = 0;
  while ((std::int64_t{1} << r) <= k) ++r;
  return {k, r, k + 2 * r + 1};
}

// Largest position whose branch reaches k+r+1 vertices. With a good ordering
// the branch at position k covers the whole graph, so a valid position exists
// whenever n exceeds the palette.
inline int select_heavy_branch(const AdditionOrdering& ao, int k, int r) {
  int n = static_cast<int>(ao.order.size());
  require(n > k + 2 * r + 1, "heavy-branch selection runs above the base size");
  std::vector<int> sizes = branch_sizes_by_position(ao);
  for (int p = n - 1; p >= k; --p)
    if (sizes[p] >= k + r + 1) return p;
  throw InvariantViolation("no heavy branch found although the graph is large");
}

// Injection from the non-common root vertices into u_1..u_r: each w maps to the
// first u_i it misses. Collisions would contradict the one-step drop of the
// running root intersection, so they are hard errors.
inline std::vector<std::pair<Vertex, Vertex>> build_injection(const Graph& g,
                                                              const std::vector<Vertex>& wbar,
                                                              const std::vector<Vertex>& U) {
  std::vector<std::pair<Vertex, Vertex>> sigma;
  std::vector<char> used(U.size(), 0);
  for (Vertex w : wbar) {
    int j = -1;
    for (std::size_t i = 0; i < U.size(); ++i)
      if (!g.has_edge(w, U[i])) {
        j = static_cast<int>(i);
        break;
      }
    require(j >= 0, "a non-common root vertex misses some of u_1..u_r");
    require(!used[j], "two root vertices first-miss the same u_i");
    used[j] = 1;
    sigma.emplace_back(w, U[j]);
  }
  require(sigma.size() == wbar.size() && wbar.size() <= U.size(),
          "the injection bounds the non-common part by r");
  return sigma;
}

struct HalvingResult {
  std::vector<int> u_colors;                 // colors for u_1..u_r
  std::vector<std::vector<Vertex>> chain;    // W_0 over W_1 over ... over W_r
};

// Sequential halving: at step i the kept side is the minority of the parity
// split of W_{i-1} with respect to the reserved color c_i, and u_i takes c_i
// (keeping the odd side out) or the fresh color k+r+i (keeping the even side
// out). odd_at(w, c) reports the parity of color c around w in the already
// colored graph.
template <class ParityFn>
HalvingResult halving_assignment(const std::vector<Vertex>& w_zero, int k, int r,
                                 const std::vector<int>& reserved, ParityFn odd_at) {
  require(static_cast<int>(reserved.size()) == r, "one reserved color per u_i");
  HalvingResult res;
  res.chain.push_back(w_zero);
  std::vector<Vertex> cur = w_zero;
  for (int i = 1; i <= r; ++i) {
    int ci = reserved[i - 1];
    std::vector<Vertex> odd_side, even_side;
    for (Vertex w : cur) (odd_at(w, ci) ? odd_side : even_side).push_back(w);
    std::vector<Vertex> keep;
    if (odd_side.size() <= even_side.size()) {
      res.u_colors.push_back(ci);
      keep = std::move(odd_side);
    } else {
      res.u_colors.push_back(k + r + i);
      keep = std::move(even_side);
    }
    require(keep.size() <= cur.size() / 2, "the kept side is at most half of the previous");
    cur = std::move(keep);
    res.chain.push_back(cur);
  }
  require(cur.empty(), "after r halvings nothing is left");
  return res;
}

// One level of the reduction, kept for replay and audit.
struct ReductionFrame {
  Vertex t_vertex = -1;
  int t_pos = 0;                                   // position in the level ordering
  std::vector<Vertex> W;                           // w_1..w_k, non-common part first
  int wbar = 0;                                    // size of the non-common part
  std::vector<Vertex> interior;                    // u_0..u_s in branch order
  std::vector<Vertex> U;                           // u_1..u_r
  std::vector<std::pair<Vertex, Vertex>> sigma;    // (w, u) pairs
  std::vector<int> reserved;                       // c_1..c_r
  std::vector<std::size_t> halving_sizes;          // |W_0|..|W_r| (filled at replay)
  std::vector<int> u_colors;                       // colors of u_1..u_r (at replay)
  int u0_color = 0;                                // (at replay)
  std::vector<Vertex> removed;
};

// Odd coloring of a k-tree, k >= 7, with palette k + 2 floor(log2 k) + 3.
inline Coloring color_ktree(const Graph& g, int k, Trace* tr = nullptr,
                            std::vector<ReductionFrame>* frames_out = nullptr) {
  if (k < 7)
    throw BuildError("the reduction needs k >= 7; smaller k has dedicated routes");
  ColorBudget bud = make_budget(k);
  AdditionOrdering good = good_addition_ordering(g, k);  // throws if not a k-tree

  std::vector<char> alive(g.n, 1);
  int alive_count = g.n;
  std::vector<ReductionFrame> frames;

  while (alive_count > bud.palette) {
    std::vector<Vertex> verts;
    std::vector<Vertex> level_order;
    for (Vertex v : good.order)
      if (alive[v]) level_order.push_back(v);
    verts = level_order;
    std::sort(verts.begin(), verts.end());
    Induced sub = induced_subgraph(g, verts);
    std::vector<Vertex> sub_order;
    for (Vertex v : level_order) sub_order.push_back(sub.to_sub[v]);
    // restricting an addition ordering keeps it one, with the same back cliques
    AdditionOrdering lao = ordering_from_vertices(sub.g, k, sub_order);
    require(sub.g.degree(sub_order[0]) == k, "restriction keeps the first vertex at degree k");

    int t = select_heavy_branch(lao, bud.k, bud.r);
    auto [branch, bord] = branch_at_position(sub.g, lao, t);

    ReductionFrame f;
    f.t_pos = t;
    f.t_vertex = sub.origin[lao.order[t]];
    for (Vertex u : bord.seq) f.interior.push_back(sub.origin[u]);
    int s = static_cast<int>(f.interior.size()) - 1;
    require(s >= bud.r, "a heavy branch has more than r interior vertices");
    for (int i = 1; i <= s; ++i)
      require(sub.g.degree(sub.to_sub[f.interior[i]]) < 2 * k,
              "later interior vertices have degree below 2k in the level graph");
    for (int i = 1; i <= bud.r; ++i) f.U.push_back(f.interior[i]);

    std::vector<Vertex> w_all;
    for (Vertex w : branch.root) w_all.push_back(sub.origin[w]);
    std::sort(w_all.begin(), w_all.end());
    std::vector<Vertex> w_bar, w_zero;
    for (Vertex w : w_all) {
      bool common = true;
      for (Vertex u : f.U)
        if (!g.has_edge(w, u)) {
          common = false;
          break;
        }
      (common ? w_zero : w_bar).push_back(w);
    }
    require(!w_bar.empty(), "u_1 sees at most k-1 root vertices, so the non-common part exists");
    f.W = w_bar;
    f.W.insert(f.W.end(), w_zero.begin(), w_zero.end());
    f.wbar = static_cast<int>(w_bar.size());
    f.sigma = build_injection(g, w_bar, f.U);

    for (int i = 0; i < bud.r; ++i) {
      int c = k + i + 1;
      for (const auto& [w, u] : f.sigma)
        if (u == f.U[i]) {
          // the color index of w in the normalized root order
          auto it = std::find(f.W.begin(), f.W.end(), w);
          c = static_cast<int>(it - f.W.begin()) + 1;
        }
      f.reserved.push_back(c);
    }
    f.removed = f.interior;
    for (Vertex v : f.interior) {
      alive[v] = 0;
      --alive_count;
    }
    frames.push_back(std::move(f));
  }

  PartialColoring pc(g, bud.palette);
  {
    int c = 1;
    for (Vertex v = 0; v < g.n; ++v)
      if (alive[v]) pc.assign(v, c++);
  }
  if (tr) tr->line("base n=" + std::to_string(alive_count) + " palette=" +
                   std::to_string(bud.palette));

  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    ReductionFrame& f = *it;
    normalize_root_colors(pc, f.W, tr);
    // halving decisions depend only on these pre-branch parities
    std::vector<Vertex> w_zero(f.W.begin() + f.wbar, f.W.end());
    std::vector<std::uint64_t> zero_masks;
    for (Vertex w : w_zero) zero_masks.push_back(pc.odd_mask[w]);
    auto odd_at = [&](Vertex w, int c) {
      for (std::size_t i = 0; i < w_zero.size(); ++i)
        if (w_zero[i] == w) return (zero_masks[i] & PartialColoring::bit(c)) != 0;
      throw InvariantViolation("halving parity asked outside the common part");
    };
    HalvingResult h = halving_assignment(w_zero, bud.k, bud.r, f.reserved, odd_at);
    for (const auto& level : h.chain) f.halving_sizes.push_back(level.size());
    f.u_colors = h.u_colors;
    for (int i = 0; i < bud.r; ++i) pc.assign(f.U[i], h.u_colors[i]);

    std::uint64_t reserved_bits = 0;
    for (int c : f.reserved) reserved_bits |= PartialColoring::bit(c);
    for (Vertex w : w_zero)
      require((pc.odd_mask[w] & reserved_bits) != 0,
              "every common root vertex is witnessed by a reserved color");

    Vertex u0 = f.interior[0];
    std::uint64_t blocked = reserved_bits;
    for (Vertex x : g.adj[u0])
      if (pc.colored(x)) blocked |= PartialColoring::bit(pc.color[x]);
    std::vector<int> candidates;
    for (int c = 1; c <= bud.palette; ++c)
      if (!(blocked & PartialColoring::bit(c))) candidates.push_back(c);
    std::vector<Vertex> w_bar(f.W.begin(), f.W.begin() + f.wbar);
    require(static_cast<int>(candidates.size()) >= f.wbar + 1,
            "the apex keeps more candidate colors than constrained root vertices");
    f.u0_color = choose_color_avoiding(pc, u0, candidates, w_bar);
    require(pc.witnessed(u0), "the apex sees the k distinct root colors");

    for (std::size_t i = bud.r + 1; i < f.interior.size(); ++i) {
      Vertex u = f.interior[i];
      std::uint64_t later_blocked = reserved_bits;
      for (Vertex x : g.adj[u])
        if (pc.colored(x)) later_blocked |= PartialColoring::bit(pc.color[x]);
      std::vector<int> cands;
      for (int c = 1; c <= bud.palette; ++c)
        if (!(later_blocked & PartialColoring::bit(c))) cands.push_back(c);
      std::vector<Vertex> constrained;
      for (Vertex x : g.adj[u]) {
        if (x == u0 || std::find(f.W.begin(), f.W.end(), x) != f.W.end())
          constrained.push_back(x);
      }
      choose_color_avoiding(pc, u, cands, constrained);
    }
    if (tr) {
      std::ostringstream os;
      os << "level t=" << f.t_vertex << " s=" << f.interior.size() - 1 << " wbar=" << f.wbar
         << " C=";
      for (std::size_t i = 0; i < f.reserved.size(); ++i)
        os << (i ? "," : "") << f.reserved[i];
      os << " halving=";
      for (std::size_t i = 0; i < f.halving_sizes.size(); ++i)
        os << (i ? ">" : "") << f.halving_sizes[i];
      os << " u0=" << f.u0_color;
      tr->line(os.str());
    }
    assert_level_odd(pc, "k-tree reduction");
  }

  Coloring out = pc.finish();
  require(is_odd_coloring(g, out), "k-tree coloring must verify");
  require(out.max_color_used() <= bud.palette, "palette bound holds");
  if (frames_out) *frames_out = std::move(frames);
  return out;
}

}  // namespace oddkt
