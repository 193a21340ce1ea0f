#pragma once

#include "oddkt/extend.hpp"
#include "oddkt/trace.hpp"
#include "oddkt/two_tree.hpp"  // shares the frame helpers

namespace oddkt {

struct GoodHat3 {
  BranchShape shape;  // a one-hat or one-hat plus
  Vertex good = -1;   // root vertex of degree 4 or odd
};

// A one-hat or one-hat plus with a root vertex of degree 4 or odd degree.
inline std::optional<GoodHat3> find_good_hat_3tree(const Graph& g) {
  auto degree_good = [&](Vertex v) { return g.degree(v) == 4 || g.degree(v) % 2 == 1; };
  auto pick_good_root = [&](const BranchShape& s) -> std::optional<GoodHat3> {
    for (Vertex r : s.root)
      if (degree_good(r)) return GoodHat3{s, r};
    return std::nullopt;
  };
  for (Vertex u0 = 0; u0 < g.n; ++u0) {
    if (g.degree(u0) == 4) {
      for (Vertex u1 : g.adj[u0]) {
        if (g.degree(u1) != 3) continue;
        std::vector<Vertex> root;
        for (Vertex x : g.adj[u0])
          if (x != u1) root.push_back(x);
        if (!is_clique(g, root)) continue;
        std::vector<Vertex> pair;
        for (Vertex r : root)
          if (g.has_edge(u1, r)) pair.push_back(r);
        if (pair.size() != 2) continue;
        Vertex v3 = -1;
        for (Vertex r : root)
          if (r != pair[0] && r != pair[1]) v3 = r;
        BranchShape s;
        s.kind = ConfigKind::OneHat;
        s.root = {pair[0], pair[1], v3};
        s.u = {u0, u1};
        if (!is_one_hat_shape(g, s)) continue;
        if (auto got = pick_good_root(s)) return got;
      }
    }
    if (g.degree(u0) == 6) {
      for (Vertex u1 : g.adj[u0]) {
        if (g.degree(u1) != 4) continue;
        for (Vertex u3 : common_neighbors(g, u0, u1)) {
          if (g.degree(u3) != 3) continue;
          Vertex v1 = -1;
          for (Vertex x : g.adj[u3])
            if (x != u0 && x != u1) v1 = x;
          if (v1 < 0 || !g.has_edge(u0, v1)) continue;
          Vertex v2 = -1;
          for (Vertex x : g.adj[u1])
            if (x != v1 && x != u0 && x != u3) v2 = x;
          if (v2 < 0 || !g.has_edge(u0, v2)) continue;
          std::vector<Vertex> rest;
          for (Vertex x : g.adj[u0])
            if (x != v1 && x != v2 && x != u1 && x != u3) rest.push_back(x);
          if (rest.size() != 2) continue;
          for (int flip = 0; flip < 2; ++flip) {
            Vertex v3 = rest[flip], u2 = rest[1 - flip];
            BranchShape s;
            s.kind = ConfigKind::OneHatPlus;
            s.root = {v1, v2, v3};
            s.u = {u0, u1, u2, u3};
            if (!is_one_hat_plus_shape(g, s)) continue;
            if (auto got = pick_good_root(s)) return got;
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace detail {

inline Unavoidable t3_at_root(const Graph& g, Vertex r1, Vertex r2, Vertex r3) {
  require(is_clique(g, {r1, r2, r3}), "T root must be a triangle");
  std::vector<Vertex> apexes = common_neighbors(g, {r1, r2, r3});
  std::vector<Vertex> picked, component_keys;
  for (Vertex a : apexes) {
    Branch b = extract_branch(g, {r1, r2, r3}, a);
    if (classify_branch_3tree(g, b).kind == ConfigKind::Other) continue;
    Vertex key = b.interior.front();
    if (std::find(component_keys.begin(), component_keys.end(), key) != component_keys.end())
      continue;
    component_keys.push_back(key);
    picked.push_back(a);
    if (picked.size() == 2) break;
  }
  require(picked.size() == 2, "two special branches must meet at the residual root triangle");
  auto t = t3_member(g, r1, r2, r3, picked[0], picked[1]);
  require(t.has_value(), "residual root triangle must carry a T member");
  return *t;
}

inline std::optional<Unavoidable> scan_unavoidable_3_anywhere(const Graph& g) {
  for (Vertex a = 0; a < g.n; ++a)
    for (Vertex b : g.adj[a]) {
      if (b <= a) continue;
      for (Vertex c : common_neighbors(g, a, b)) {
        if (c <= b) continue;
        for (Vertex d : common_neighbors(g, {a, b, c})) {
          for (auto [v1, v2, v3, u0] : {std::array<Vertex, 4>{a, b, c, d},
                                        {a, b, d, c},
                                        {a, c, d, b},
                                        {b, c, d, a}}) {
            auto m = h3_member(g, v1, v2, v3, u0);
            if (m && !h_member_is_special_branch(g, *m)) return m;
          }
        }
      }
    }
  for (Vertex a = 0; a < g.n; ++a)
    for (Vertex b : g.adj[a]) {
      if (b <= a) continue;
      for (Vertex c : common_neighbors(g, a, b)) {
        if (c <= b) continue;
        std::vector<Vertex> picked, keys;
        for (Vertex x : common_neighbors(g, {a, b, c})) {
          Branch br = extract_branch(g, {a, b, c}, x);
          if (classify_branch_3tree(g, br).kind == ConfigKind::Other) continue;
          Vertex key = br.interior.front();
          if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
          keys.push_back(key);
          picked.push_back(x);
          if (picked.size() == 2) break;
        }
        if (picked.size() == 2) {
          auto t = t3_member(g, a, b, c, picked[0], picked[1]);
          if (t) return t;
        }
      }
    }
  return std::nullopt;
}

}  // namespace detail

// A member of the 3-tree H or T family that is neither a one-hat nor a one-hat
// plus, by degree-3 peeling.
inline Unavoidable find_unavoidable_3tree(const Graph& g) {
  if (g.n < 5) throw TooSmall("unavoidable configurations need at least 5 vertices");
  std::vector<char> low(g.n, 0);
  for (Vertex v = 0; v < g.n; ++v)
    if (g.degree(v) == 3) low[v] = 1;
  for (int stage = 1; stage <= 3; ++stage) {
    std::vector<Vertex> residual;
    for (Vertex v = 0; v < g.n; ++v)
      if (!low[v]) residual.push_back(v);
    if (residual.empty()) {
      auto m = detail::scan_unavoidable_3_anywhere(g);
      require(m.has_value(), "closed peeling shape must contain a family member");
      return *m;
    }
    if (residual.size() == 3)
      return detail::t3_at_root(g, residual[0], residual[1], residual[2]);
    require(residual.size() >= 4, "peeling cannot leave one or two vertices");
    Induced sub = induced_subgraph(g, residual);
    std::vector<Vertex> level;
    for (Vertex v = 0; v < sub.g.n; ++v)
      if (sub.g.degree(v) == 3) level.push_back(sub.origin[v]);
    require(!level.empty(), "a residual 3-tree has low-degree vertices");
    for (Vertex v : level) {
      std::vector<Vertex> high;
      for (Vertex w : g.adj[v])
        if (!low[w]) high.push_back(w);
      require(high.size() == 3, "a level vertex has exactly three non-peeled neighbors");
      // pair counts: common low-neighbors of v and both ends of the pair
      std::array<std::pair<Vertex, Vertex>, 3> pairs = {
          std::pair<Vertex, Vertex>{high[0], high[1]}, {high[1], high[2]}, {high[2], high[0]}};
      int best = 0;
      std::array<std::vector<Vertex>, 3> commons;
      for (int i = 0; i < 3; ++i) {
        for (Vertex u : common_neighbors(g, {v, pairs[i].first, pairs[i].second}))
          if (low[u]) commons[i].push_back(u);
        if (commons[i].size() > commons[best].size()) best = i;
      }
      if (commons[best].size() >= 2) {
        auto t = t3_member(g, v, pairs[best].first, pairs[best].second, commons[best][0],
                           commons[best][1]);
        require(t.has_value(), "duplicated side apexes must form a T member");
        return *t;
      }
      require(commons[best].size() == 1, "a level vertex has a peeled neighbor on some pair");
      auto m = h3_member(g, high[0], high[1], high[2], v);
      require(m.has_value(), "a level vertex must root an H member");
      if (h_member_is_special_branch(g, *m)) continue;
      return *m;
    }
    for (Vertex v : level) low[v] = 1;
  }
  throw InvariantViolation("no unavoidable configuration found in a 3-tree");
}

// ---------------------------------------------------------------------------
// Odd 5-coloring of 3-trees.
// ---------------------------------------------------------------------------

namespace detail {

enum class Case3 {
  GoodHat,
  PlusSide,     // H with a one-hat-plus side
  TwoEars,      // H(2,0,0)
  ThreeEars,    // H(3,0,0)
  EarHat,       // H(1,1,0), not itself a plus
  TwoEarsHat,   // H(2,1,0)
  TwoHats,      // H(0,2,0)
  ManyHats,     // H(1,2,0) or H(0,3,0)
  TwinPlus,     // T with a plus
  TwinEars3,    // T(2,0,0)
  TwinEarHat,   // T(1,1,0)
  TwinHats,     // T(0,2,0)
};

inline const char* case3_name(Case3 c) {
  switch (c) {
    case Case3::GoodHat: return "GOOD_HAT3";
    case Case3::PlusSide: return "H_C1";
    case Case3::TwoEars: return "H200";
    case Case3::ThreeEars: return "H300";
    case Case3::EarHat: return "H110";
    case Case3::TwoEarsHat: return "H210";
    case Case3::TwoHats: return "H020";
    case Case3::ManyHats: return "H120_OR_H030";
    case Case3::TwinPlus: return "T_C1";
    case Case3::TwinEars3: return "T200";
    case Case3::TwinEarHat: return "T110";
    case Case3::TwinHats: return "T020";
  }
  return "?";
}

struct Frame3 {
  Case3 c{};
  Vertex v1 = -1, v2 = -1, v3 = -1;
  Vertex u0 = -1;
  Vertex good = -1;           // GoodHat
  BranchShape b1, b2, b3;     // case-specific shapes (kind Triangle = empty side)
  int variant = 0;            // PlusSide: 0 = deg-4 side root, 1 = shape (a), 2 = shape (b)
  int twin_variant = 0;       // TwinHats: 0 = same pendant pair, 1 = shifted
  int dlvl_u0 = 0;
  int dlvl_good = 0;
  std::vector<Vertex> removed;
  std::string note;
};

inline bool bit4_odd(const PartialColoring& pc, Vertex v) {
  return (pc.odd_mask[v] & PartialColoring::bit(4)) != 0;
}

// The plus-side case: extend the non-triangle companion branches so that v3
// (and, at degree >= 8, the apex u0) end up witnessed. Ears can fix one root;
// one-hats and pluses spare a single root and fix the other two.
inline void plus_side_companions(PartialColoring& pc, const Frame3& f, bool fix_u0) {
  std::vector<const BranchShape*> ext;
  for (const BranchShape* s : {&f.b2, &f.b3})
    if (s->kind != ConfigKind::Triangle) ext.push_back(s);
  if (!fix_u0) {
    for (const BranchShape* s : ext) {
      if (s->kind == ConfigKind::Ear3) extend_near_odd_3_ear(pc, *s, f.v3);
      else extend_near_odd_3(pc, *s, f.u0);
    }
    return;
  }
  // Degree >= 8: the last extension must repair both v3 and u0, so it has to be
  // a one-hat or plus spared at its plain root.
  std::vector<const BranchShape*> ears, others;
  for (const BranchShape* s : ext)
    (s->kind == ConfigKind::Ear3 ? ears : others).push_back(s);
  require(!others.empty(), "a high-degree apex needs a one-hat or plus companion");
  for (const BranchShape* s : ears) extend_near_odd_3_ear(pc, *s, f.v3);
  for (std::size_t i = 0; i + 1 < others.size(); ++i) extend_near_odd_3(pc, *others[i], f.u0);
  const BranchShape* last = others.back();
  Vertex spare = -1;
  for (Vertex r : last->root)
    if (r != f.u0 && r != f.v3) spare = r;
  require(spare >= 0, "companion root must contain a plain root vertex");
  extend_near_odd_3(pc, *last, spare);
  require(pc.witnessed(f.u0), "last companion extension must repair the apex");
}

inline void replay_frame3(PartialColoring& pc, const Frame3& f, Trace* tr);

inline void replay_plus_side(PartialColoring& pc, const Frame3& f, Trace* tr) {
  auto flow = [&](const char* name) {
    if (tr) tr->line(std::string("  flow=") + name + " variant=" + std::to_string(f.variant) +
                     " d=" + std::to_string(f.dlvl_u0));
  };
  Vertex u0 = f.u0;
  Vertex p1 = f.b1.u[0], p2 = f.b1.u[1], p3 = f.b1.u[2], p4 = f.b1.u[3];
  bool tri2 = f.b2.kind == ConfigKind::Triangle;
  bool tri3 = f.b3.kind == ConfigKind::Triangle;
  if (f.variant == 0) {
    // the plus meets the apex at its degree-4 root
    require(!(tri2 && tri3), "both companions empty puts the apex at odd degree");
    flow(f.dlvl_u0 >= 8 ? "deg4-slot-high" : "deg4-slot-low");
    pc.assign(u0, 4);
    pc.assign(p1, 5);
    pc.assign(p3, 3);
    plus_side_companions(pc, f, f.dlvl_u0 >= 8);
    BranchShape inner;
    inner.kind = ConfigKind::OneHat;
    inner.root = {f.v2, p1, f.v1};
    inner.u = {p2, p4};
    extend_near_odd_3(pc, inner, p1);
    require(pc.witnessed(u0) && pc.witnessed(p1), "plus centers see four distinct colors");
    return;
  }
  // variant 1 = shape (a): p4 next to u0; variant 2 = shape (b): p4 next to v1
  BranchShape inner;
  inner.kind = ConfigKind::OneHat;
  inner.root = f.variant == 1 ? std::vector<Vertex>{u0, p1, f.v1}
                              : std::vector<Vertex>{f.v1, p1, u0};
  inner.u = {p2, p4};
  if (tri2 && tri3) {
    flow("both-triangles");
    choose_color_avoiding(pc, u0, {4, 5}, {f.v3});
    pc.assign(p1, pc.color[u0] == 4 ? 5 : 4);
    choose_color_avoiding(pc, p3, {1, 2, 3, 4, 5}, {f.v2});
    extend_near_odd_3(pc, inner, u0);
    require(pc.witnessed(u0), "apex sees four distinct colors in the closed shape");
    return;
  }
  if (!tri2 && !tri3) {
    flow("both-companions");
    pc.assign(u0, 4);
    pc.assign(p1, 5);
    pc.assign(p3, 3);
    if (f.b2.kind == ConfigKind::Ear3) extend_near_odd_3_ear(pc, f.b2, f.v2);
    else extend_near_odd_3(pc, f.b2, u0);
    if (f.b3.kind == ConfigKind::Ear3) extend_near_odd_3_ear(pc, f.b3, f.v3);
    else extend_near_odd_3(pc, f.b3, u0);
    extend_near_odd_3(pc, inner, p1);
    require(pc.witnessed(p1), "plus center sees four distinct colors");
    return;
  }
  // exactly one companion: the apex has degree 8, the companion is a one-hat
  require(f.dlvl_u0 == 8, "odd apex degrees fall to the good-hat case");
  const BranchShape& companion = tri2 ? f.b3 : f.b2;
  require(companion.kind == ConfigKind::OneHat, "degree-8 companion must be a one-hat");
  if (!tri2) {
    flow("alpha");
    // companion on the (v2,v3) side
    pc.assign(u0, 4);
    pc.assign(p1, 5);
    pc.assign(p3, 3);
    extend_near_odd_3(pc, companion, u0);
    extend_near_odd_3(pc, inner, p1);
  } else {
    flow("beta");
    // companion on the (v3,v1) side
    pc.assign(u0, 4);
    pc.assign(p1, 5);
    pc.assign(p2, 3);
    choose_color_avoiding(pc, p3, {1, 2, 3, 4, 5}, {f.v2});
    Vertex x = f.variant == 1 ? u0 : f.v1;
    extend_near_odd_3(pc, companion, x);
    choose_color_avoiding(pc, p4, {1, 2, 4}, {x});
  }
  require(pc.witnessed(p1), "plus center sees four distinct colors");
}

inline void replay_frame3(PartialColoring& pc, const Frame3& f, Trace* tr) {
  if (tr)
    tr->line(std::string("case=") + case3_name(f.c) + " root=(" + std::to_string(f.v1) + "," +
             std::to_string(f.v2) + "," + std::to_string(f.v3) + ")" + f.note);
  normalize_root_colors(pc, {f.v1, f.v2, f.v3}, tr);
  switch (f.c) {
    case Case3::GoodHat: {
      if (f.b1.kind == ConfigKind::OneHat || f.b1.kind == ConfigKind::OneHatPlus)
        extend_near_odd_3(pc, f.b1, f.good);
      require(pc.witnessed(f.good), "good root has degree 4 or odd degree, so it is witnessed");
      break;
    }
    case Case3::PlusSide: {
      replay_plus_side(pc, f, tr);
      break;
    }
    case Case3::TwoEars: {
      Vertex e1 = f.b1.u[0], e2 = f.b2.u[0];
      if (tr)
        tr->line(std::string("  parity4=") + (bit4_odd(pc, f.v1) ? "o" : "e") +
                 (bit4_odd(pc, f.v2) ? "o" : "e") + (bit4_odd(pc, f.v3) ? "o" : "e"));
      if (!bit4_odd(pc, f.v2)) {
        pc.assign(f.u0, 4);
        choose_color_avoiding(pc, e1, {3, 5}, {f.v1});
        choose_color_avoiding(pc, e2, {1, 5}, {f.v3});
      } else if (!bit4_odd(pc, f.v1)) {
        pc.assign(f.u0, 4);
        choose_color_avoiding(pc, e2, {1, 5}, {f.v3});
        choose_color_avoiding(pc, e1, {3, 5}, {f.v2});
      } else if (!bit4_odd(pc, f.v3)) {
        pc.assign(f.u0, 4);
        choose_color_avoiding(pc, e1, {3, 5}, {f.v1});
        choose_color_avoiding(pc, e2, {1, 5}, {f.v2});
      } else {
        pc.assign(f.u0, 5);
        pc.assign(e1, 3);
        pc.assign(e2, 1);
      }
      break;
    }
    case Case3::ThreeEars: {
      if (tr)
        tr->line(std::string("  parity4=") + (bit4_odd(pc, f.v1) ? "o" : "e") +
                 (bit4_odd(pc, f.v2) ? "o" : "e") + (bit4_odd(pc, f.v3) ? "o" : "e"));
      int rot = 0;
      std::array<Vertex, 3> vs{f.v1, f.v2, f.v3};
      std::array<Vertex, 3> es{f.b1.u[0], f.b2.u[0], f.b3.u[0]};
      for (int i = 0; i < 3; ++i)
        if (!bit4_odd(pc, vs[i])) {
          rot = i;
          break;
        }
      if (!bit4_odd(pc, vs[rot])) {
        // rotate so the even root speaks first; recipe colors follow the roots
        std::array<Vertex, 3> v{vs[rot], vs[(rot + 1) % 3], vs[(rot + 2) % 3]};
        std::array<Vertex, 3> e{es[rot], es[(rot + 1) % 3], es[(rot + 2) % 3]};
        std::array<int, 3> col{pc.color[v[0]], pc.color[v[1]], pc.color[v[2]]};
        pc.assign(f.u0, 4);
        pc.assign(e[0], 5);
        choose_color_avoiding(pc, e[1], {col[0], 5}, {v[1]});
        choose_color_avoiding(pc, e[2], {col[1], 5}, {v[2]});
        require(pc.witnessed(v[0]), "even root gains an odd neighborhood class");
        require(pc.witnessed(f.u0), "apex sees four distinct colors");
      } else {
        pc.assign(f.u0, 5);
        pc.assign(es[0], 4);
        pc.assign(es[1], 4);
        pc.assign(es[2], 4);
      }
      break;
    }
    case Case3::EarHat: {
      Vertex e = f.b2.u[0];
      pc.assign(f.u0, 4);
      choose_color_avoiding(pc, e, {1, 5}, {f.v3});
      extend_near_odd_3(pc, f.b1, f.u0);
      require(pc.witnessed(f.u0), "shared root keeps a singleton color class at the apex");
      break;
    }
    case Case3::TwoEarsHat: {
      Vertex e2 = f.b2.u[0], e3 = f.b3.u[0];
      pc.assign(f.u0, 4);
      pc.assign(e2, 5);
      choose_color_avoiding(pc, e3, {2, 5}, {f.v3});
      extend_near_odd_3(pc, f.b1, f.u0);
      require(pc.witnessed(f.u0), "apex sees four distinct colors");
      break;
    }
    case Case3::TwoHats: {
      Vertex h1 = f.b1.u[0], p1 = f.b1.u[1];
      pc.assign(f.u0, 4);
      pc.assign(h1, 5);
      choose_color_avoiding(pc, p1, {3, 4}, {f.v1});
      extend_near_odd_3(pc, f.b2, f.u0);
      require(pc.witnessed(f.u0), "apex sees four distinct colors");
      break;
    }
    case Case3::ManyHats: {
      Frame3 w = f;
      if (tr)
        tr->line(std::string("  d=") + std::to_string(f.dlvl_u0) + " parity4=" +
                 (bit4_odd(pc, f.v1) ? "o" : "e") + (bit4_odd(pc, f.v2) ? "o" : "e") +
                 (bit4_odd(pc, f.v3) ? "o" : "e") + " third=" + config_kind_name(f.b3.kind));
      if (f.dlvl_u0 == 8) {
        if (bit4_odd(pc, w.v1) && !bit4_odd(pc, w.v3)) {
          // mirror v1 <-> v3 so an even root, when present, speaks as v1
          std::swap(w.v1, w.v3);
          std::swap(w.b1, w.b2);
        }
        Vertex a3 = w.b3.u[0];
        if (!bit4_odd(pc, w.v1)) {
          pc.assign(w.u0, 4);
          pc.assign(a3, 5);
          if (w.b3.kind == ConfigKind::OneHat) pc.assign(w.b3.u[1], 2);
          extend_near_odd_3(pc, w.b2, w.u0);
          extend_near_odd_3(pc, w.b1, w.v1);
          require(pc.witnessed(w.v1), "even root gains an odd class at the apex color");
        } else if (!bit4_odd(pc, w.v2)) {
          pc.assign(w.u0, 4);
          pc.assign(a3, 5);
          if (w.b3.kind == ConfigKind::OneHat) pc.assign(w.b3.u[1], 2);
          extend_near_odd_3(pc, w.b1, w.v2);
          extend_near_odd_3(pc, w.b2, w.v2);
          require(pc.witnessed(w.v2), "even root gains an odd class at the apex color");
        } else {
          pc.assign(w.u0, 5);
          pc.assign(w.b1.u[0], 4);
          pc.assign(w.b2.u[0], 4);
          pc.assign(a3, 4);
          choose_color_avoiding(pc, w.b1.u[1], {1, 2, 3, 4, 5}, {});
          choose_color_avoiding(pc, w.b2.u[1], {1, 2, 3, 4, 5}, {});
          if (w.b3.kind == ConfigKind::OneHat)
            choose_color_avoiding(pc, w.b3.u[1], {1, 2, 3, 4, 5}, {});
          require(pc.witnessed(w.u0), "apex meets three vertices of its reserved color");
        }
      } else {
        require(f.dlvl_u0 == 6, "even apex degrees only");
        Vertex a3 = w.b3.u[0];
        pc.assign(w.u0, 4);
        pc.assign(a3, 5);
        if (w.b3.kind == ConfigKind::OneHat) pc.assign(w.b3.u[1], 2);
        extend_near_odd_3(pc, w.b1, w.u0);
        extend_near_odd_3(pc, w.b2, w.u0);
        require(pc.witnessed(w.u0), "apex sees four distinct colors");
      }
      break;
    }
    case Case3::TwinPlus: {
      if (tr) tr->line(std::string("  partner=") + config_kind_name(f.b2.kind));
      Vertex p1 = f.b1.u[0], p2 = f.b1.u[1], p3 = f.b1.u[2], p4 = f.b1.u[3];
      pc.assign(p1, 4);
      pc.assign(p3, 5);
      if (f.b2.kind == ConfigKind::Ear3) extend_near_odd_3_ear(pc, f.b2, f.v3);
      else extend_near_odd_3(pc, f.b2, f.v1);
      BranchShape inner;
      inner.kind = ConfigKind::OneHat;
      inner.root = {f.v1, p1, f.v2};
      inner.u = {p2, p4};
      extend_near_odd_3(pc, inner, p1);
      require(pc.witnessed(p1), "plus center sees four distinct colors");
      break;
    }
    case Case3::TwinEars3: {
      pc.assign(f.b1.u[0], 4);
      pc.assign(f.b2.u[0], 4);
      break;
    }
    case Case3::TwinEarHat: {
      Vertex h0 = f.b1.u[0], h1 = f.b1.u[1], w0 = f.b2.u[0];
      choose_color_avoiding(pc, h1, {3, 4, 5}, {f.v1, f.v2});
      int j = pc.color[h1] == 4 ? 5 : 4;
      pc.assign(h0, j);
      pc.assign(w0, j);
      break;
    }
    case Case3::TwinHats: {
      if (tr) tr->line(std::string("  twin_variant=") + std::to_string(f.twin_variant));
      Vertex u0 = f.b1.u[0], u1 = f.b1.u[1], w0 = f.b2.u[0], w1 = f.b2.u[1];
      if (f.twin_variant == 0) {
        pc.assign(u0, 4);
        pc.assign(w0, 4);
        pc.assign(u1, 5);
        pc.assign(w1, 5);
      } else {
        pc.assign(u0, 4);
        // make the 4-class odd at v1 ignoring u1 (u1 never takes color 4)
        pc.assign(w0, bit4_odd(pc, f.v1) ? 5 : 4);
        choose_color_avoiding(pc, w1, {1, 4, 5}, {f.v3});
        choose_color_avoiding(pc, u1, {3, 5}, {f.v2});
        require(pc.witnessed(f.v1), "first root keeps its odd 4-class");
      }
      break;
    }
  }
  for (Vertex v : f.removed)
    require(pc.colored(v), "frame replay must color every removed vertex");
  assert_level_odd(pc, std::string("3-tree ") + case3_name(f.c));
}

}  // namespace detail

namespace detail {

// Side branch of an H member at an ordered root pair (p,q) with apex u0:
// Triangle placeholder when the pair has no further common neighbor.
inline BranchShape side_or_triangle(const Graph& g, Vertex p, Vertex q, Vertex u0,
                                    Vertex exclude) {
  std::vector<Vertex> cn;
  for (Vertex x : common_neighbors(g, {p, q, u0}))
    if (x != exclude) cn.push_back(x);
  if (cn.empty()) {
    BranchShape t;
    t.kind = ConfigKind::Triangle;
    t.root = {p, q, u0};
    return t;
  }
  require(cn.size() == 1, "an H member side admits at most one apex");
  Branch b = extract_branch(g, {p, q, u0}, cn[0]);
  BranchShape s = classify_branch_3tree(g, b);
  require(s.kind != ConfigKind::Other, "H member side must be a special branch");
  return s;
}

inline const std::vector<Vertex>& pendant_pair_requires(const BranchShape& s) {
  require(s.kind == ConfigKind::OneHat, "pendant pair is a one-hat notion");
  return s.root;  // root[0], root[1] carry the pendant
}

}  // namespace detail

// Proper odd coloring of a 3-tree with at most 5 colors.
inline Coloring color_3tree(const Graph& g, Trace* tr = nullptr,
                            std::vector<Unavoidable>* found_configs = nullptr) {
  recognize_ktree(g, 3);
  std::vector<detail::Frame3> frames;
  std::vector<Vertex> cur(g.n);
  for (Vertex v = 0; v < g.n; ++v) cur[v] = v;

  while (cur.size() > 5) {
    Induced sub = induced_subgraph(g, cur);
    detail::Frame3 f;
    if (auto good = find_good_hat_3tree(sub.g)) {
      f.c = detail::Case3::GoodHat;
      f.b1 = translate_shape(good->shape, sub.origin);
      f.good = sub.origin[good->good];
      f.v1 = f.b1.root[0];
      f.v2 = f.b1.root[1];
      f.v3 = f.b1.root[2];
      f.removed = f.b1.u;
      f.note = " good=" + std::to_string(f.good);
    } else {
      Unavoidable h = find_unavoidable_3tree(sub.g);
      require(validate_unavoidable(sub.g, h), "located configuration failed re-validation");
      Unavoidable ho = translate_unavoidable(h, sub.origin);
      if (found_configs) found_configs->push_back(ho);
      f.note = " match=" + serialize_config(ho);
      f.removed = ho.removal_set();
      if (ho.family == Family::T) {
        if (ho.c >= 1) {
          f.c = detail::Case3::TwinPlus;
          int pi = ho.shapes[0].kind == ConfigKind::OneHatPlus ? 0 : 1;
          f.b1 = ho.shapes[pi];
          f.b2 = ho.shapes[1 - pi];
          f.v1 = f.b1.root[0];
          f.v2 = f.b1.root[1];
          f.v3 = f.b1.root[2];
        } else if (ho.a == 2) {
          f.c = detail::Case3::TwinEars3;
          f.b1 = ho.shapes[0];
          f.b2 = ho.shapes[1];
          f.v1 = ho.root[0];
          f.v2 = ho.root[1];
          f.v3 = ho.root[2];
        } else if (ho.a == 1 && ho.b == 1) {
          f.c = detail::Case3::TwinEarHat;
          int hi = ho.shapes[0].kind == ConfigKind::OneHat ? 0 : 1;
          f.b1 = ho.shapes[hi];
          f.b2 = ho.shapes[1 - hi];
          f.v1 = f.b1.root[0];
          f.v2 = f.b1.root[1];
          f.v3 = f.b1.root[2];
        } else {
          require(ho.b == 2, "T member kinds must multiset to two");
          f.c = detail::Case3::TwinHats;
          f.b1 = ho.shapes[0];
          f.b2 = ho.shapes[1];
          std::vector<Vertex> p1{f.b1.root[0], f.b1.root[1]};
          std::vector<Vertex> p2{f.b2.root[0], f.b2.root[1]};
          std::sort(p1.begin(), p1.end());
          std::sort(p2.begin(), p2.end());
          if (p1 == p2) {
            f.twin_variant = 0;
            f.v1 = f.b1.root[0];
            f.v2 = f.b1.root[1];
            f.v3 = f.b1.root[2];
          } else {
            f.twin_variant = 1;
            Vertex shared = -1;
            for (Vertex x : p1)
              for (Vertex y : p2)
                if (x == y) shared = x;
            require(shared >= 0, "shifted twin hats share one pendant root");
            f.v2 = shared;
            f.v1 = p1[0] == shared ? p1[1] : p1[0];
            f.v3 = p2[0] == shared ? p2[1] : p2[0];
            // orient both one-hats so the shared root is their second pendant slot
            if (f.b1.root[0] == shared) std::swap(f.b1.root[0], f.b1.root[1]);
            if (f.b2.root[0] != shared) std::swap(f.b2.root[0], f.b2.root[1]);
          }
        }
      } else if (ho.c >= 1) {
        f.c = detail::Case3::PlusSide;
        f.u0 = ho.apex;
        int pick = -1;
        for (std::size_t i = 0; i < ho.shapes.size(); ++i)
          if (ho.shapes[i].kind == ConfigKind::OneHatPlus) {
            if (ho.shapes[i].root[2] == f.u0) {  // the degree-4 root slot
              pick = static_cast<int>(i);
              break;
            }
            if (pick < 0) pick = static_cast<int>(i);
          }
        require(pick >= 0, "plus-side case needs a one-hat-plus side");
        f.b1 = ho.shapes[pick];
        int side = ho.side_of[pick];
        Vertex pa = ho.root[side], pb = ho.root[(side + 1) % 3];
        f.v3 = ho.root[(side + 2) % 3];
        if (f.b1.root[2] == f.u0) {
          f.variant = 0;  // deg-4 slot: roles run (v2, v1, u0)
          f.v2 = f.b1.root[0];
          f.v1 = f.b1.root[1];
        } else if (f.b1.root[0] == f.u0) {
          f.variant = 1;  // shape (a): roles (u0, v1, v2)
          f.v1 = f.b1.root[1];
          f.v2 = f.b1.root[2];
        } else {
          require(f.b1.root[1] == f.u0, "apex must be a root of its side branch");
          f.variant = 2;  // shape (b): roles (v1, u0, v2)
          f.v1 = f.b1.root[0];
          f.v2 = f.b1.root[2];
        }
        require((f.v1 == pa && f.v2 == pb) || (f.v1 == pb && f.v2 == pa),
                "side pair must carry the plus");
        f.b2 = detail::side_or_triangle(sub.g, sub.to_sub[f.v2], sub.to_sub[f.v3],
                                        sub.to_sub[f.u0], sub.to_sub[f.v1]);
        f.b3 = detail::side_or_triangle(sub.g, sub.to_sub[f.v3], sub.to_sub[f.v1],
                                        sub.to_sub[f.u0], sub.to_sub[f.v2]);
        f.b2 = translate_shape(f.b2, sub.origin);
        f.b3 = translate_shape(f.b3, sub.origin);
        f.dlvl_u0 = sub.g.degree(sub.to_sub[f.u0]);
        if (f.dlvl_u0 % 2 == 1 || f.dlvl_u0 == 4)
          throw InvariantViolation("plus-side apex of good degree escaped the good-hat scan");
      } else if (ho.a == 2 && ho.b == 0) {
        f.c = detail::Case3::TwoEars;
        f.u0 = ho.apex;
        int s1 = ho.side_of[0], s2 = ho.side_of[1];
        // sides s and s+1 share root s+1 (cyclic)
        int shared = (s2 == (s1 + 1) % 3) ? s2 : s1;
        int first = (s2 == (s1 + 1) % 3) ? s1 : s2;
        f.v2 = ho.root[shared];
        f.v1 = ho.root[first];
        f.v3 = ho.root[3 - shared - first];
        f.b1 = ho.side_of[0] == first ? ho.shapes[0] : ho.shapes[1];
        f.b2 = ho.side_of[0] == first ? ho.shapes[1] : ho.shapes[0];
      } else if (ho.a == 3) {
        f.c = detail::Case3::ThreeEars;
        f.u0 = ho.apex;
        f.v1 = ho.root[0];
        f.v2 = ho.root[1];
        f.v3 = ho.root[2];
        f.b1 = ho.shapes[0];
        f.b2 = ho.shapes[1];
        f.b3 = ho.shapes[2];
      } else if (ho.a == 1 && ho.b == 1) {
        f.c = detail::Case3::EarHat;
        f.u0 = ho.apex;
        int hi = ho.shapes[0].kind == ConfigKind::OneHat ? 0 : 1;
        f.b1 = ho.shapes[hi];
        f.b2 = ho.shapes[1 - hi];
        f.dlvl_u0 = sub.g.degree(sub.to_sub[f.u0]);
        require(f.dlvl_u0 == 6, "degree-5 apex falls to the good-hat case");
        // not itself a plus, so the one-hat pendant rides on the apex and the
        // root shared with the ear side
        const auto& pp = detail::pendant_pair_requires(f.b1);
        require(pp[0] == f.u0 || pp[1] == f.u0, "pendant must touch the apex (else a plus)");
        f.v2 = pp[0] == f.u0 ? pp[1] : pp[0];
        f.v1 = f.b1.root[2];
        for (Vertex r : ho.root)
          if (r != f.v1 && r != f.v2) f.v3 = r;
        require(g.has_edge(f.b2.u[0], f.v2) && g.has_edge(f.b2.u[0], f.v3),
                "the ear side must ride on the shared root");
      } else if (ho.a == 2 && ho.b == 1) {
        f.c = detail::Case3::TwoEarsHat;
        f.u0 = ho.apex;
        f.dlvl_u0 = sub.g.degree(sub.to_sub[f.u0]);
        require(f.dlvl_u0 == 6, "degree-7 apex falls to the good-hat case");
        int hi = -1;
        for (std::size_t i = 0; i < ho.shapes.size(); ++i)
          if (ho.shapes[i].kind == ConfigKind::OneHat) hi = static_cast<int>(i);
        f.b1 = ho.shapes[hi];
        const auto& pp = detail::pendant_pair_requires(f.b1);
        require(pp[0] != f.u0 && pp[1] != f.u0,
                "degree-6 apex sees only the one-hat apex on that side");
        f.v1 = std::min(pp[0], pp[1]);
        f.v2 = std::max(pp[0], pp[1]);
        for (Vertex r : ho.root)
          if (r != f.v1 && r != f.v2) f.v3 = r;
        for (std::size_t i = 0; i < ho.shapes.size(); ++i) {
          if (static_cast<int>(i) == hi) continue;
          const BranchShape& e = ho.shapes[i];
          if (g.has_edge(e.u[0], f.v2)) f.b2 = e;  // ear at (v2,v3)
          else f.b3 = e;                           // ear at (v3,v1)
        }
        require(f.b2.kind == ConfigKind::Ear3 && f.b3.kind == ConfigKind::Ear3,
                "the other two sides are ears");
      } else if (ho.b == 2 && ho.a == 0) {
        f.c = detail::Case3::TwoHats;
        f.u0 = ho.apex;
        f.dlvl_u0 = sub.g.degree(sub.to_sub[f.u0]);
        require(f.dlvl_u0 == 6, "degree-5 or -7 apex falls to the good-hat case");
        const auto& pA = detail::pendant_pair_requires(ho.shapes[0]);
        bool a_contrib1 = pA[0] != f.u0 && pA[1] != f.u0;
        int lo = a_contrib1 ? 0 : 1;
        f.b1 = ho.shapes[lo];
        f.b2 = ho.shapes[1 - lo];
        const auto& p1 = detail::pendant_pair_requires(f.b1);
        require(p1[0] != f.u0 && p1[1] != f.u0, "exactly one side meets the apex twice");
        const auto& p2 = detail::pendant_pair_requires(f.b2);
        require(p2[0] == f.u0 || p2[1] == f.u0, "exactly one side meets the apex twice");
        // the contribution-1 side spans its whole root pair; the shared main
        // root of the two side pairs becomes v2
        int s1 = ho.side_of[0], s2 = ho.side_of[1];
        int shared_idx = (s2 == (s1 + 1) % 3) ? s2 : s1;
        f.v2 = ho.root[shared_idx];
        require(f.v2 == p1[0] || f.v2 == p1[1], "contribution-1 pendant spans the shared root");
        f.v1 = p1[0] == f.v2 ? p1[1] : p1[0];
        for (Vertex r : ho.root)
          if (r != f.v1 && r != f.v2) f.v3 = r;
      } else if (ho.b >= 2) {
        f.c = detail::Case3::ManyHats;
        f.u0 = ho.apex;
        f.dlvl_u0 = sub.g.degree(sub.to_sub[f.u0]);
        require(f.dlvl_u0 == 6 || f.dlvl_u0 == 8,
                "degree-7 or -9 apex falls to the good-hat case");
        // slot the low-contribution side (the ear, or the one-hat whose pendant
        // avoids the apex) third
        int third = -1;
        for (std::size_t i = 0; i < ho.shapes.size(); ++i) {
          const BranchShape& s = ho.shapes[i];
          if (s.kind == ConfigKind::Ear3) third = static_cast<int>(i);
        }
        if (third < 0 && f.dlvl_u0 == 8) {
          for (std::size_t i = 0; i < ho.shapes.size(); ++i) {
            const auto& pp = detail::pendant_pair_requires(ho.shapes[i]);
            if (pp[0] != f.u0 && pp[1] != f.u0) third = static_cast<int>(i);
          }
        }
        if (third < 0) third = 2;
        int s3 = ho.side_of[third];
        // rotate the root so that side s3 becomes the (v3,v1) slot
        int r = (s3 + 1) % 3;
        f.v1 = ho.root[r % 3];
        f.v2 = ho.root[(r + 1) % 3];
        f.v3 = ho.root[(r + 2) % 3];
        for (std::size_t i = 0; i < ho.shapes.size(); ++i) {
          int slot = (ho.side_of[i] - r + 3) % 3;
          (slot == 0 ? f.b1 : slot == 1 ? f.b2 : f.b3) = ho.shapes[i];
        }
        require(f.b1.kind == ConfigKind::OneHat && f.b2.kind == ConfigKind::OneHat,
                "first two slots carry one-hats");
        if (f.dlvl_u0 == 8) {
          const auto& q1 = detail::pendant_pair_requires(f.b1);
          const auto& q2 = detail::pendant_pair_requires(f.b2);
          require((q1[0] == f.u0 || q1[1] == f.u0) && (q2[0] == f.u0 || q2[1] == f.u0),
                  "degree-8 apex meets both one-hat pendants");
        }
      } else {
        throw InvariantViolation("3-tree case dispatch exhausted on " + serialize_config(ho));
      }
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

  PartialColoring pc(g, 5);
  {
    int c = 1;
    for (Vertex v : cur) pc.assign(v, c++);
  }
  if (tr) tr->line("base n=" + std::to_string(cur.size()));
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) detail::replay_frame3(pc, *it, tr);
  Coloring out = pc.finish();
  require(is_odd_coloring(g, out), "3-tree coloring must verify");
  return out;
}

}  // namespace oddkt
