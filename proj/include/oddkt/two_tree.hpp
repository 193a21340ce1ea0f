#pragma once

#include "oddkt/extend.hpp"
#include "oddkt/trace.hpp"

namespace oddkt {

// A hat whose root vertex v1 has degree 4 or odd degree. Scans apexes of
// degree 4 in ascending order and returns the hat oriented so that the
// qualifying root plays v1.
inline std::optional<BranchShape> find_good_hat_2tree(const Graph& g) {
  auto degree_good = [&](Vertex v) { return g.degree(v) == 4 || g.degree(v) % 2 == 1; };
  for (Vertex u0 = 0; u0 < g.n; ++u0) {
    if (g.degree(u0) != 4) continue;
    const auto& nb = g.adj[u0];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex p = nb[i], q = nb[j];
        if (g.degree(p) != 2 || g.degree(q) != 2) continue;
        std::vector<Vertex> roots;
        for (Vertex x : nb)
          if (x != p && x != q) roots.push_back(x);
        if (!g.has_edge(roots[0], roots[1])) continue;
        for (int flip = 0; flip < 2; ++flip) {
          Vertex x = roots[flip], y = roots[1 - flip];
          BranchShape s;
          s.kind = ConfigKind::Hat;
          s.root = {x, y};
          s.u = {u0, p, q};
          if (!is_hat_shape(g, s)) {
            std::swap(s.u[1], s.u[2]);
            if (!is_hat_shape(g, s)) continue;
          }
          if (degree_good(x)) return s;
        }
      }
    }
  }
  return std::nullopt;
}

namespace detail {

// The two-branch configuration rooted at a pair: used when a peeling level
// leaves exactly two vertices. Picks the two smallest apexes from distinct
// components of g - {r1,r2}.
inline Unavoidable t2_at_root(const Graph& g, Vertex r1, Vertex r2) {
  require(g.has_edge(r1, r2), "T root must be an edge");
  std::vector<Vertex> apexes = common_neighbors(g, r1, r2);
  std::vector<Vertex> picked;
  std::vector<Vertex> component_keys;
  for (Vertex a : apexes) {
    Branch b = extract_branch(g, {r1, r2}, a);
    if (classify_branch_2tree(g, b).kind == ConfigKind::Other) continue;
    Vertex key = b.interior.front();
    if (std::find(component_keys.begin(), component_keys.end(), key) != component_keys.end())
      continue;
    component_keys.push_back(key);
    picked.push_back(a);
    if (picked.size() == 2) break;
  }
  require(picked.size() == 2, "two special branches must meet at the residual root edge");
  auto t = t2_member(g, r1, r2, picked[0], picked[1]);
  require(t.has_value(), "residual root edge must carry a T member");
  return *t;
}

// Whole-graph fallback for the two closed shapes the peeling can end in: scan
// every rooted triangle for an H member that is neither a hat nor a double hat.
inline std::optional<Unavoidable> scan_h2_anywhere(const Graph& g) {
  for (Vertex a = 0; a < g.n; ++a)
    for (Vertex b : g.adj[a]) {
      if (b <= a) continue;
      for (Vertex c : common_neighbors(g, a, b)) {
        for (auto [v1, v2, u0] :
             {std::array<Vertex, 3>{a, b, c}, {a, c, b}, {b, c, a}}) {
          auto m = h2_member(g, v1, v2, u0);
          if (m && !h_member_is_special_branch(g, *m)) return m;
        }
      }
    }
  return std::nullopt;
}

}  // namespace detail

// A member of the 2-tree H or T family that is neither a hat nor a double hat,
// found by peeling degree-2 levels: duplicated side apexes give T members,
// otherwise the level vertex roots an H member unless it sits inside a hat
// (level 1) or double hat (level 2), in which case the next level decides.
inline Unavoidable find_unavoidable_2tree(const Graph& g) {
  if (g.n < 4) throw TooSmall("unavoidable configurations need at least 4 vertices");
  std::vector<char> low(g.n, 0);
  for (Vertex v = 0; v < g.n; ++v)
    if (g.degree(v) == 2) low[v] = 1;
  for (int stage = 1; stage <= 3; ++stage) {
    std::vector<Vertex> residual;
    for (Vertex v = 0; v < g.n; ++v)
      if (!low[v]) residual.push_back(v);
    if (residual.empty()) {
      auto m = detail::scan_h2_anywhere(g);
      require(m.has_value(), "closed peeling shape must contain an H member");
      return *m;
    }
    if (residual.size() == 2) return detail::t2_at_root(g, residual[0], residual[1]);
    require(residual.size() >= 3, "peeling cannot leave exactly one vertex");
    Induced sub = induced_subgraph(g, residual);
    std::vector<Vertex> level;
    for (Vertex v = 0; v < sub.g.n; ++v)
      if (sub.g.degree(v) == 2) level.push_back(sub.origin[v]);
    require(!level.empty(), "a residual 2-tree has low-degree vertices");
    for (Vertex v : level) {
      std::vector<Vertex> high;
      for (Vertex w : g.adj[v])
        if (!low[w]) high.push_back(w);
      require(high.size() == 2, "a level vertex has exactly two non-peeled neighbors");
      Vertex x = high[0], y = high[1];
      auto low_common = [&](Vertex side) {
        std::vector<Vertex> out;
        for (Vertex u : common_neighbors(g, v, side))
          if (low[u]) out.push_back(u);
        return out;
      };
      std::vector<Vertex> cx = low_common(x), cy = low_common(y);
      if (cy.size() > cx.size()) {
        std::swap(x, y);
        std::swap(cx, cy);
      }
      if (cx.size() >= 2) {
        auto t = t2_member(g, v, x, cx[0], cx[1]);
        require(t.has_value(), "duplicated side apexes must form a T member");
        return *t;
      }
      require(cx.size() == 1, "a level vertex has a peeled neighbor on some side");
      auto m = h2_member(g, x, y, v);
      require(m.has_value(), "a level vertex must root an H member");
      if (h_member_is_special_branch(g, *m)) continue;  // inside a hat or double hat
      return *m;
    }
    for (Vertex v : level) low[v] = 1;
  }
  throw InvariantViolation("no unavoidable configuration found in a 2-tree");
}

// ---------------------------------------------------------------------------
// Odd 4-coloring of 2-trees.
// ---------------------------------------------------------------------------

namespace detail {

enum class Case2 { GoodHat, SingleEar, DoubleHatSide, TwinEars, TwinWithHat, TwinWithDoubleHat };

inline const char* case2_name(Case2 c) {
  switch (c) {
    case Case2::GoodHat: return "GOOD_HAT";
    case Case2::SingleEar: return "H100";
    case Case2::DoubleHatSide: return "H101_OR_H002";
    case Case2::TwinEars: return "T200";
    case Case2::TwinWithHat: return "T_B1";
    case Case2::TwinWithDoubleHat: return "T_C1";
  }
  return "?";
}

struct Frame2 {
  Case2 c{};
  Vertex v1 = -1, v2 = -1;      // spared roots, in recipe order
  Vertex u0 = -1, u1 = -1;      // case-specific vertices
  BranchShape b1;               // good hat / twin hat / twin double hat / case-3 double-hat side
  BranchShape b2;               // twin partner or case-3 second side
  int deg_v1 = 0;               // degree of v1 in the level graph (good hat)
  std::vector<Vertex> removed;
  std::string note;
};

inline void replay_frame2(PartialColoring& pc, const Frame2& f, Trace* tr) {
  if (tr) tr->line(std::string("case=") + case2_name(f.c) + " root=(" + std::to_string(f.v1) +
                   "," + std::to_string(f.v2) + ")" + f.note);
  normalize_root_colors(pc, {f.v1, f.v2}, tr);
  switch (f.c) {
    case Case2::GoodHat: {
      if (f.deg_v1 % 2 == 1) {
        extend_near_odd_2(pc, f.b1, f.v1);
        require(pc.witnessed(f.v1), "odd-degree hat root must be witnessed");
      } else {
        require(f.deg_v1 == 4, "good hat root degree must be 4 or odd");
        pc.assign(f.b1.u[0], 3);
        pc.assign(f.b1.u[1], 4);
        choose_color_avoiding(pc, f.b1.u[2], {1, 4}, {f.v2});
        require(pc.witnessed(f.v1), "degree-4 hat root sees three distinct colors");
        require(pc.witnessed(f.b1.u[0]), "hat center sees three distinct colors");
      }
      break;
    }
    case Case2::SingleEar: {
      choose_color_avoiding(pc, f.u0, {3, 4}, {f.v2});
      choose_color_avoiding(pc, f.u1, {2, 3, 4}, {f.v1});
      break;
    }
    case Case2::DoubleHatSide: {
      // b1: the double hat on root (v1,u0); b2: the ear or double hat on (v2,u0).
      // d = (center, arm-at-v1, arm-at-u0, pendant-on-v1, pendant-under-arm1,
      //      pendant-under-arm2, pendant-on-u0).
      const auto& d = f.b1.u;
      Vertex u0 = f.u0;
      pc.assign(d[0], 2);
      pc.assign(d[1], 3);
      pc.assign(d[3], 4);
      choose_color_avoiding(pc, u0, {3, 4}, {f.v1});
      extend_near_odd_2(pc, f.b2, u0);
      BranchShape inner_hat;
      inner_hat.kind = ConfigKind::Hat;
      inner_hat.root = {d[0], u0};
      inner_hat.u = {d[2], d[5], d[6]};
      extend_near_odd_2(pc, inner_hat, d[0]);
      BranchShape inner_ear;
      inner_ear.kind = ConfigKind::Ear2;
      inner_ear.root = {d[1], d[0]};
      inner_ear.u = {d[4]};
      extend_near_odd_2(pc, inner_ear, d[1]);
      require(pc.witnessed(d[1]), "degree-4 junction of the side double hat sees three colors");
      break;
    }
    case Case2::TwinEars: {
      pc.assign(f.u0, 3);
      pc.assign(f.u1, 3);
      break;
    }
    case Case2::TwinWithHat: {
      pc.assign(f.b1.u[0], 3);
      pc.assign(f.b1.u[1], 4);
      extend_near_odd_2(pc, f.b2, f.v2);
      choose_color_avoiding(pc, f.b1.u[2], {1, 4}, {f.v2});
      require(pc.witnessed(f.b1.u[0]), "twin hat center sees three distinct colors");
      break;
    }
    case Case2::TwinWithDoubleHat: {
      const auto& d = f.b1.u;
      pc.assign(d[0], 3);
      pc.assign(d[1], 4);
      pc.assign(d[3], 2);
      extend_near_odd_2(pc, f.b2, f.v2);
      BranchShape inner_hat;
      inner_hat.kind = ConfigKind::Hat;
      inner_hat.root = {d[0], f.v2};
      inner_hat.u = {d[2], d[5], d[6]};
      extend_near_odd_2(pc, inner_hat, d[0]);
      choose_color_avoiding(pc, d[4], {1, 2}, {d[0]});
      require(pc.witnessed(d[1]), "twin double-hat upper arm sees three distinct colors");
      break;
    }
  }
  for (Vertex v : f.removed)
    require(pc.colored(v), "frame replay must color every removed vertex");
  assert_level_odd(pc, std::string("2-tree ") + case2_name(f.c));
}

}  // namespace detail

// Proper odd coloring of a 2-tree with at most 4 colors.
inline Coloring color_2tree(const Graph& g, Trace* tr = nullptr,
                            std::vector<Unavoidable>* found_configs = nullptr) {
  recognize_ktree(g, 2);
  std::vector<detail::Frame2> frames;
  std::vector<Vertex> cur(g.n);
  for (Vertex v = 0; v < g.n; ++v) cur[v] = v;

  while (cur.size() > 4) {
    Induced sub = induced_subgraph(g, cur);
    detail::Frame2 f;
    if (auto hat = find_good_hat_2tree(sub.g)) {
      f.c = detail::Case2::GoodHat;
      f.deg_v1 = sub.g.degree(hat->root[0]);
      f.b1 = translate_shape(*hat, sub.origin);
      f.v1 = f.b1.root[0];
      f.v2 = f.b1.root[1];
      f.removed = f.b1.u;
    } else {
      Unavoidable h = find_unavoidable_2tree(sub.g);
      require(validate_unavoidable(sub.g, h), "located configuration failed re-validation");
      Unavoidable ho = translate_unavoidable(h, sub.origin);
      if (found_configs) found_configs->push_back(ho);
      f.note = " match=" + serialize_config(ho);
      if (ho.family == Family::T) {
        if (ho.a == 2) {
          f.c = detail::Case2::TwinEars;
          f.v1 = ho.root[0];
          f.v2 = ho.root[1];
          f.u0 = ho.shapes[0].u[0];
          f.u1 = ho.shapes[1].u[0];
        } else if (ho.b >= 1) {
          f.c = detail::Case2::TwinWithHat;
          int hi = ho.shapes[0].kind == ConfigKind::Hat ? 0 : 1;
          f.b1 = ho.shapes[hi];
          f.b2 = ho.shapes[1 - hi];
          f.v1 = f.b1.root[0];
          f.v2 = f.b1.root[1];
          f.b2 = oriented_2shape(f.b2, f.v1);
        } else {
          require(ho.c >= 1, "T member must contain a special branch");
          f.c = detail::Case2::TwinWithDoubleHat;
          int di = ho.shapes[0].kind == ConfigKind::DoubleHat ? 0 : 1;
          f.b1 = ho.shapes[di];
          f.b2 = ho.shapes[1 - di];
          f.v1 = f.b1.root[0];
          f.v2 = f.b1.root[1];
          f.b2 = oriented_2shape(f.b2, f.v1);
        }
      } else if (ho.a == 1 && ho.b == 0 && ho.c == 0) {
        f.c = detail::Case2::SingleEar;
        int side = ho.side_of[0];
        f.v1 = ho.root[side];
        f.v2 = ho.root[1 - side];
        f.u0 = ho.apex;
        f.u1 = ho.shapes[0].u[0];
      } else if (ho.c >= 1 && ho.b == 0 && ho.a + ho.c == 2) {
        f.c = detail::Case2::DoubleHatSide;
        int di = ho.shapes[0].kind == ConfigKind::DoubleHat ? 0 : 1;
        int side = ho.side_of[di];
        f.v1 = ho.root[side];
        f.v2 = ho.root[1 - side];
        f.u0 = ho.apex;
        f.b1 = ho.shapes[di];  // root (v1, u0) by construction
        require(f.b1.root[0] == f.v1 && f.b1.root[1] == f.u0,
                "double-hat side must be rooted at (v1, u0)");
        f.b2 = ho.shapes[1 - di];
        require(f.b2.root[0] == f.v2 && f.b2.root[1] == f.u0,
                "second side must be rooted at (v2, u0)");
        f.b2 = oriented_2shape(f.b2, f.u0);  // the recipe spares u0 on that side
      } else {
        throw InvariantViolation("2-tree case dispatch exhausted on " + serialize_config(ho));
      }
      f.removed = ho.removal_set();
    }
    std::vector<char> drop(g.n, 0);
    for (Vertex v : f.removed) drop[v] = 1;
    std::vector<Vertex> next;
    for (Vertex v : cur)
      if (!drop[v]) next.push_back(v);
    require(next.size() + f.removed.size() == cur.size(), "removed set must lie in the level");
    cur = std::move(next);
    frames.push_back(std::move(f));
  }

  PartialColoring pc(g, 4);
  {
    int c = 1;
    for (Vertex v : cur) pc.assign(v, c++);
  }
  if (tr) tr->line("base n=" + std::to_string(cur.size()));
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) detail::replay_frame2(pc, *it, tr);
  Coloring out = pc.finish();
  require(is_odd_coloring(g, out), "2-tree coloring must verify");
  return out;
}

}  // namespace oddkt
