#pragma once

#include "oddkt/branch.hpp"

namespace oddkt {

enum class ConfigKind {
  Ear2,        // 2-tree: B({v1,v2},u0) with N(u0)={v1,v2}
  Hat,         // 2-tree, 5 vertices
  DoubleHat,   // 2-tree, 9 vertices
  Ear3,        // 3-tree: B({v1,v2,v3},u0) with N(u0)={v1,v2,v3}
  OneHat,      // 3-tree, 5 vertices
  OneHatPlus,  // 3-tree, 7 vertices
  Triangle,    // placeholder for an empty side in the 3-tree case analysis
  Other,
};

inline const char* config_kind_name(ConfigKind k) {
  switch (k) {
    case ConfigKind::Ear2: return "EAR2";
    case ConfigKind::Hat: return "HAT";
    case ConfigKind::DoubleHat: return "DOUBLE_HAT";
    case ConfigKind::Ear3: return "EAR3";
    case ConfigKind::OneHat: return "ONE_HAT";
    case ConfigKind::OneHatPlus: return "ONE_HAT_PLUS";
    case ConfigKind::Triangle: return "TRIANGLE";
    case ConfigKind::Other: return "OTHER";
  }
  return "?";
}

// A classified special branch with its role labels. The adjacency conditions of
// every shape are checked against the host graph, not just inside the branch.
//
//   Ear2       root=(v1,v2)     u=(u0)
//   Hat        root=(v1,v2)     u=(u0,u1,u2)        u1 next to v1, u2 next to v2
//   DoubleHat  root=(v1,v2)     u=(u0,...,u6)
//   Ear3       root=(v1,v2,v3)  u=(u0)
//   OneHat     root=(v1,v2,v3)  u=(u0,u1)           u1 next to v1 and v2
//   OneHatPlus root=(v1,v2,v3)  u=(u0,u1,u2,u3)
//   Triangle   root=(a,b,c)     u=()
struct BranchShape {
  ConfigKind kind = ConfigKind::Other;
  std::vector<Vertex> root;
  std::vector<Vertex> u;
  std::string why_other;  // diagnostic when kind == Other

  std::vector<Vertex> interior() const { return u; }
  std::vector<Vertex> all_vertices() const {
    std::vector<Vertex> vs = root;
    vs.insert(vs.end(), u.begin(), u.end());
    std::sort(vs.begin(), vs.end());
    return vs;
  }
};

namespace detail {

inline bool same_set(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline bool nbhd_is(const Graph& g, Vertex v, std::vector<Vertex> expect) {
  std::sort(expect.begin(), expect.end());
  return g.adj[v] == expect;
}

}  // namespace detail

// Exact-shape checks (the defining neighborhood lists, verified in the host graph).

inline bool is_ear2(const Graph& g, const BranchShape& s) {
  return s.kind == ConfigKind::Ear2 && s.u.size() == 1 &&
         detail::nbhd_is(g, s.u[0], {s.root[0], s.root[1]});
}

inline bool is_hat_shape(const Graph& g, const BranchShape& s) {
  if (s.kind != ConfigKind::Hat || s.u.size() != 3) return false;
  Vertex v1 = s.root[0], v2 = s.root[1], u0 = s.u[0], u1 = s.u[1], u2 = s.u[2];
  return detail::nbhd_is(g, u0, {v1, v2, u1, u2}) && detail::nbhd_is(g, u1, {v1, u0}) &&
         detail::nbhd_is(g, u2, {v2, u0});
}

inline bool is_double_hat_shape(const Graph& g, const BranchShape& s) {
  if (s.kind != ConfigKind::DoubleHat || s.u.size() != 7) return false;
  Vertex v1 = s.root[0], v2 = s.root[1];
  const auto& u = s.u;
  return detail::nbhd_is(g, u[0], {v1, v2, u[1], u[2], u[4], u[5]}) &&
         detail::nbhd_is(g, u[1], {v1, u[0], u[3], u[4]}) &&
         detail::nbhd_is(g, u[2], {v2, u[0], u[5], u[6]}) &&
         detail::nbhd_is(g, u[3], {v1, u[1]}) && detail::nbhd_is(g, u[4], {u[0], u[1]}) &&
         detail::nbhd_is(g, u[5], {u[0], u[2]}) && detail::nbhd_is(g, u[6], {v2, u[2]});
}

// Classify a 2-rooted branch as an ear, a hat, or a double hat of g, with labels
// aligned to the given root order (root[0] plays v1). Role extraction is
// pattern-directed; any mismatch yields Other with the first failed condition.
inline BranchShape classify_branch_2tree(const Graph& g, const Branch& b) {
  require(b.root.size() == 2, "2-tree branch classification needs a 2-vertex root");
  BranchShape s;
  s.root = b.root;
  Vertex v1 = b.root[0], v2 = b.root[1], u0 = b.apex;
  auto other = [&](const std::string& why) {
    BranchShape o;
    o.kind = ConfigKind::Other;
    o.root = b.root;
    o.why_other = why;
    return o;
  };
  if (b.interior.size() == 1) {
    s.kind = ConfigKind::Ear2;
    s.u = {u0};
    if (!is_ear2(g, s)) return other("single interior vertex has neighbors beyond the root");
    return s;
  }
  if (b.interior.size() == 3) {
    if (g.degree(u0) != 4) return other("hat center must have degree 4");
    std::vector<Vertex> rest;
    for (Vertex x : b.interior)
      if (x != u0) rest.push_back(x);
    Vertex u1 = -1, u2 = -1;
    for (Vertex x : rest) {
      if (g.has_edge(x, v1)) u1 = x;
      if (g.has_edge(x, v2)) u2 = x;
    }
    if (u1 < 0 || u2 < 0 || u1 == u2) return other("hat side vertices must pair with the two roots");
    s.kind = ConfigKind::Hat;
    s.u = {u0, u1, u2};
    if (!is_hat_shape(g, s)) return other("hat adjacency lists do not match");
    return s;
  }
  if (b.interior.size() == 7) {
    if (g.degree(u0) != 6) return other("double-hat center must have degree 6");
    Vertex u1 = -1, u2 = -1;
    for (Vertex x : g.adj[u0]) {
      if (x == v1 || x == v2) continue;
      if (g.has_edge(x, v1) && g.degree(x) == 4) u1 = x;
      if (g.has_edge(x, v2) && g.degree(x) == 4) u2 = x;
    }
    if (u1 < 0 || u2 < 0 || u1 == u2) return other("double-hat arms not found");
    Vertex u4 = -1, u5 = -1;
    for (Vertex x : g.adj[u0]) {
      if (x == v1 || x == v2 || x == u1 || x == u2) continue;
      if (g.has_edge(x, u1)) u4 = x;
      if (g.has_edge(x, u2)) u5 = x;
    }
    if (u4 < 0 || u5 < 0 || u4 == u5) return other("double-hat inner pendants not found");
    Vertex u3 = -1, u6 = -1;
    for (Vertex x : g.adj[u1])
      if (x != v1 && x != u0 && x != u4) u3 = x;
    for (Vertex x : g.adj[u2])
      if (x != v2 && x != u0 && x != u5) u6 = x;
    if (u3 < 0 || u6 < 0) return other("double-hat outer pendants not found");
    s.kind = ConfigKind::DoubleHat;
    s.u = {u0, u1, u2, u3, u4, u5, u6};
    if (!is_double_hat_shape(g, s)) return other("double-hat adjacency lists do not match");
    return s;
  }
  return other("interior size " + std::to_string(b.interior.size()) +
               " matches no special 2-tree branch");
}

// Swap the two root roles of a symmetric 2-rooted shape.
inline BranchShape swapped_2shape(const BranchShape& s) {
  BranchShape t = s;
  std::swap(t.root[0], t.root[1]);
  if (s.kind == ConfigKind::Hat) t.u = {s.u[0], s.u[2], s.u[1]};
  if (s.kind == ConfigKind::DoubleHat)
    t.u = {s.u[0], s.u[2], s.u[1], s.u[6], s.u[5], s.u[4], s.u[3]};
  return t;
}

// Orient a 2-rooted shape so that `want_v1` plays the v1 role.
inline BranchShape oriented_2shape(const BranchShape& s, Vertex want_v1) {
  if (s.root[0] == want_v1) return s;
  require(s.root[1] == want_v1, "orientation target must be a root vertex");
  return swapped_2shape(s);
}

inline bool is_ear3(const Graph& g, const BranchShape& s) {
  return s.kind == ConfigKind::Ear3 && s.u.size() == 1 &&
         detail::nbhd_is(g, s.u[0], {s.root[0], s.root[1], s.root[2]});
}

inline bool is_one_hat_shape(const Graph& g, const BranchShape& s) {
  if (s.kind != ConfigKind::OneHat || s.u.size() != 2) return false;
  Vertex v1 = s.root[0], v2 = s.root[1], v3 = s.root[2], u0 = s.u[0], u1 = s.u[1];
  return detail::nbhd_is(g, u0, {v1, v2, v3, u1}) && detail::nbhd_is(g, u1, {v1, v2, u0});
}

inline bool is_one_hat_plus_shape(const Graph& g, const BranchShape& s) {
  if (s.kind != ConfigKind::OneHatPlus || s.u.size() != 4) return false;
  Vertex v1 = s.root[0], v2 = s.root[1], v3 = s.root[2];
  const auto& u = s.u;
  return detail::nbhd_is(g, u[0], {v1, v2, v3, u[1], u[2], u[3]}) &&
         detail::nbhd_is(g, u[1], {v1, v2, u[0], u[3]}) &&
         detail::nbhd_is(g, u[2], {v2, v3, u[0]}) &&
         detail::nbhd_is(g, u[3], {v1, u[0], u[1]});
}

// Classify a 3-rooted branch. A one-hat keeps the caller's root set but reorders
// it so that u1 is adjacent to v1 and v2; a one-hat plus has no root symmetry,
// so all three root roles are forced by the structure.
inline BranchShape classify_branch_3tree(const Graph& g, const Branch& b) {
  require(b.root.size() == 3, "3-tree branch classification needs a 3-vertex root");
  Vertex u0 = b.apex;
  auto other = [&](const std::string& why) {
    BranchShape o;
    o.kind = ConfigKind::Other;
    o.root = b.root;
    o.why_other = why;
    return o;
  };
  if (b.interior.size() == 1) {
    BranchShape s;
    s.kind = ConfigKind::Ear3;
    s.root = b.root;
    s.u = {u0};
    if (!is_ear3(g, s)) return other("single interior vertex has neighbors beyond the root");
    return s;
  }
  if (b.interior.size() == 2) {
    Vertex u1 = b.interior[0] == u0 ? b.interior[1] : b.interior[0];
    std::vector<Vertex> pair;
    for (Vertex r : b.root)
      if (g.has_edge(u1, r)) pair.push_back(r);
    if (pair.size() != 2) return other("one-hat pendant must touch exactly two root vertices");
    Vertex v3 = -1;
    for (Vertex r : b.root)
      if (r != pair[0] && r != pair[1]) v3 = r;
    BranchShape s;
    s.kind = ConfigKind::OneHat;
    s.root = {pair[0], pair[1], v3};
    s.u = {u0, u1};
    if (!is_one_hat_shape(g, s)) return other("one-hat adjacency lists do not match");
    return s;
  }
  if (b.interior.size() == 4) {
    std::vector<Vertex> rest;
    for (Vertex x : b.interior)
      if (x != u0) rest.push_back(x);
    Vertex u1 = -1, u2 = -1, u3 = -1;
    for (Vertex x : rest) {
      int rdeg = 0;
      for (Vertex r : b.root)
        if (g.has_edge(x, r)) ++rdeg;
      if (rdeg == 1 && g.degree(x) == 3) u3 = x;
    }
    if (u3 < 0) return other("one-hat-plus inner pendant not found");
    for (Vertex x : rest)
      if (x != u3 && g.has_edge(x, u3)) u1 = x;
    if (u1 < 0) return other("one-hat-plus arm not found");
    for (Vertex x : rest)
      if (x != u3 && x != u1) u2 = x;
    Vertex v1 = -1, v2 = -1, v3 = -1;
    for (Vertex r : b.root)
      if (g.has_edge(u3, r)) v1 = r;
    for (Vertex r : b.root)
      if (r != v1 && g.has_edge(u1, r)) v2 = r;
    for (Vertex r : b.root)
      if (r != v1 && r != v2) v3 = r;
    if (v1 < 0 || v2 < 0 || v3 < 0) return other("one-hat-plus root roles not forced");
    BranchShape s;
    s.kind = ConfigKind::OneHatPlus;
    s.root = {v1, v2, v3};
    s.u = {u0, u1, u2, u3};
    if (!is_one_hat_plus_shape(g, s)) return other("one-hat-plus adjacency lists do not match");
    return s;
  }
  return other("interior size " + std::to_string(b.interior.size()) +
               " matches no special 3-tree branch");
}

// ---------------------------------------------------------------------------
// Located members of the rooted configuration families.
// ---------------------------------------------------------------------------

enum class Family { H, T };

struct Unavoidable {
  Family family = Family::H;
  int a = 0, b = 0, c = 0;        // multiset of side/branch kinds (ears, hats, double or plus)
  std::vector<Vertex> root;        // ordered role labels v1,v2(,v3)
  Vertex apex = -1;                // H only: the branch apex u0
  std::vector<int> side_of;        // H only: which side each shape sits on
  std::vector<BranchShape> shapes; // H: side shapes; T: the two branches
  std::vector<Vertex> vertices;    // all configuration vertices, sorted

  std::vector<Vertex> removal_set() const {
    std::vector<Vertex> out;
    for (Vertex v : vertices)
      if (std::find(root.begin(), root.end(), v) == root.end()) out.push_back(v);
    return out;
  }
};

inline std::string serialize_config(const Unavoidable& u) {
  std::ostringstream os;
  os << (u.family == Family::H ? "H" : "T") << u.root.size() << "(" << u.a << "," << u.b << ","
     << u.c << ") root=";
  for (std::size_t i = 0; i < u.root.size(); ++i) os << (i ? "," : "") << u.root[i];
  if (u.family == Family::H) os << " u0=" << u.apex;
  for (std::size_t i = 0; i < u.shapes.size(); ++i) {
    const auto& s = u.shapes[i];
    os << " " << config_kind_name(s.kind);
    if (u.family == Family::H) os << "@side" << u.side_of[i];
    os << "[";
    for (std::size_t j = 0; j < s.root.size(); ++j) os << (j ? "," : "") << s.root[j];
    os << ";";
    for (std::size_t j = 0; j < s.u.size(); ++j) os << (j ? "," : "") << s.u[j];
    os << "]";
  }
  return os.str();
}

namespace detail {

inline void tally(ConfigKind k, int& a, int& b, int& c) {
  if (k == ConfigKind::Ear2 || k == ConfigKind::Ear3) ++a;
  else if (k == ConfigKind::Hat || k == ConfigKind::OneHat) ++b;
  else if (k == ConfigKind::DoubleHat || k == ConfigKind::OneHatPlus) ++c;
}

}  // namespace detail

// Membership test for the 2-tree H family: branch B({v1,v2},u0) where each root
// shares at most two neighbors with u0, and when it shares exactly two the
// extra one heads an ear/hat/double-hat side branch.
inline std::optional<Unavoidable> h2_member(const Graph& g, Vertex v1, Vertex v2, Vertex u0) {
  if (!is_clique(g, {v1, v2, u0})) return std::nullopt;
  Unavoidable res;
  res.family = Family::H;
  res.root = {v1, v2};
  res.apex = u0;
  Branch main = extract_branch(g, {v1, v2}, u0);
  res.vertices = main.vertices;
  const Vertex roots[2] = {v1, v2};
  const Vertex others[2] = {v2, v1};
  for (int side = 0; side < 2; ++side) {
    auto cn = common_neighbors(g, u0, roots[side]);
    if (cn.size() > 2) return std::nullopt;
    if (cn.size() == 2) {
      Vertex u_side = cn[0] == others[side] ? cn[1] : cn[0];
      if (u_side == others[side]) return std::nullopt;
      if (std::find(cn.begin(), cn.end(), others[side]) == cn.end()) return std::nullopt;
      Branch sb = extract_branch(g, {roots[side], u0}, u_side);
      BranchShape shape = classify_branch_2tree(g, sb);
      if (shape.kind == ConfigKind::Other) return std::nullopt;
      detail::tally(shape.kind, res.a, res.b, res.c);
      res.side_of.push_back(side);
      res.shapes.push_back(std::move(shape));
    }
  }
  int total = res.a + res.b + res.c;
  if (total < 1 || total > 2) return std::nullopt;
  return res;
}

// Membership test for the 2-tree T family: two branches on a shared root edge,
// both special. Also asserts that the two interiors are disjoint with no edges
// between them (the root edge separates them).
inline std::optional<Unavoidable> t2_member(const Graph& g, Vertex v1, Vertex v2, Vertex a1,
                                            Vertex a2) {
  if (!g.has_edge(v1, v2) || a1 == a2) return std::nullopt;
  if (!g.has_edge(a1, v1) || !g.has_edge(a1, v2)) return std::nullopt;
  if (!g.has_edge(a2, v1) || !g.has_edge(a2, v2)) return std::nullopt;
  Branch b1 = extract_branch(g, {v1, v2}, a1);
  Branch b2 = extract_branch(g, {v1, v2}, a2);
  BranchShape s1 = classify_branch_2tree(g, b1);
  BranchShape s2 = classify_branch_2tree(g, b2);
  if (s1.kind == ConfigKind::Other || s2.kind == ConfigKind::Other) return std::nullopt;
  for (Vertex x : b1.interior)
    for (Vertex y : b2.interior) {
      require(x != y, "branches of a T member must have disjoint interiors");
      require(!g.has_edge(x, y), "branches of a T member must not touch across the root");
    }
  Unavoidable res;
  res.family = Family::T;
  res.root = {v1, v2};
  detail::tally(s1.kind, res.a, res.b, res.c);
  detail::tally(s2.kind, res.a, res.b, res.c);
  res.shapes = {std::move(s1), std::move(s2)};
  res.vertices = b1.vertices;
  for (Vertex v : b2.interior) res.vertices.push_back(v);
  std::sort(res.vertices.begin(), res.vertices.end());
  res.vertices.erase(std::unique(res.vertices.begin(), res.vertices.end()), res.vertices.end());
  return res;
}

// 3-tree H family. Side i pairs roots (v_i, v_{i+1}) cyclically: side 0 is
// (v1,v2) with apex u1, side 1 is (v2,v3) with u2, side 2 is (v3,v1) with u3.
inline std::optional<Unavoidable> h3_member(const Graph& g, Vertex v1, Vertex v2, Vertex v3,
                                            Vertex u0) {
  if (!is_clique(g, {v1, v2, v3, u0})) return std::nullopt;
  Unavoidable res;
  res.family = Family::H;
  res.root = {v1, v2, v3};
  res.apex = u0;
  Branch main = extract_branch(g, {v1, v2, v3}, u0);
  res.vertices = main.vertices;
  const Vertex pa[3] = {v1, v2, v3};
  const Vertex pb[3] = {v2, v3, v1};
  const Vertex third[3] = {v3, v1, v2};
  for (int side = 0; side < 3; ++side) {
    auto cn = common_neighbors(g, {u0, pa[side], pb[side]});
    if (cn.size() > 2) return std::nullopt;
    if (cn.size() == 2) {
      if (std::find(cn.begin(), cn.end(), third[side]) == cn.end()) return std::nullopt;
      Vertex u_side = cn[0] == third[side] ? cn[1] : cn[0];
      Branch sb = extract_branch(g, {pa[side], pb[side], u0}, u_side);
      BranchShape shape = classify_branch_3tree(g, sb);
      if (shape.kind == ConfigKind::Other) return std::nullopt;
      detail::tally(shape.kind, res.a, res.b, res.c);
      res.side_of.push_back(side);
      res.shapes.push_back(std::move(shape));
    }
  }
  int total = res.a + res.b + res.c;
  if (total < 1 || total > 3) return std::nullopt;
  return res;
}

inline std::optional<Unavoidable> t3_member(const Graph& g, Vertex v1, Vertex v2, Vertex v3,
                                            Vertex a1, Vertex a2) {
  if (!is_clique(g, {v1, v2, v3}) || a1 == a2) return std::nullopt;
  for (Vertex r : {v1, v2, v3})
    if (!g.has_edge(a1, r) || !g.has_edge(a2, r)) return std::nullopt;
  Branch b1 = extract_branch(g, {v1, v2, v3}, a1);
  Branch b2 = extract_branch(g, {v1, v2, v3}, a2);
  BranchShape s1 = classify_branch_3tree(g, b1);
  BranchShape s2 = classify_branch_3tree(g, b2);
  if (s1.kind == ConfigKind::Other || s2.kind == ConfigKind::Other) return std::nullopt;
  for (Vertex x : b1.interior)
    for (Vertex y : b2.interior) {
      require(x != y, "branches of a T member must have disjoint interiors");
      require(!g.has_edge(x, y), "branches of a T member must not touch across the root");
    }
  Unavoidable res;
  res.family = Family::T;
  res.root = {v1, v2, v3};
  detail::tally(s1.kind, res.a, res.b, res.c);
  detail::tally(s2.kind, res.a, res.b, res.c);
  res.shapes = {std::move(s1), std::move(s2)};
  res.vertices = b1.vertices;
  for (Vertex v : b2.interior) res.vertices.push_back(v);
  std::sort(res.vertices.begin(), res.vertices.end());
  res.vertices.erase(std::unique(res.vertices.begin(), res.vertices.end()), res.vertices.end());
  return res;
}

inline BranchShape translate_shape(const BranchShape& s, const std::vector<Vertex>& origin) {
  BranchShape t = s;
  for (Vertex& v : t.root) v = origin[v];
  for (Vertex& v : t.u) v = origin[v];
  return t;
}

inline Unavoidable translate_unavoidable(const Unavoidable& u, const std::vector<Vertex>& origin) {
  Unavoidable t = u;
  for (Vertex& v : t.root) v = origin[v];
  if (t.apex >= 0) t.apex = origin[t.apex];
  for (auto& s : t.shapes) s = translate_shape(s, origin);
  for (Vertex& v : t.vertices) v = origin[v];
  std::sort(t.vertices.begin(), t.vertices.end());
  return t;
}

// Re-validate a located configuration from scratch against the graph.
inline bool validate_unavoidable(const Graph& g, const Unavoidable& u) {
  std::optional<Unavoidable> again;
  if (u.family == Family::H && u.root.size() == 2)
    again = h2_member(g, u.root[0], u.root[1], u.apex);
  else if (u.family == Family::H && u.root.size() == 3)
    again = h3_member(g, u.root[0], u.root[1], u.root[2], u.apex);
  else if (u.family == Family::T && u.root.size() == 2)
    again = t2_member(g, u.root[0], u.root[1], u.shapes.at(0).u.at(0), u.shapes.at(1).u.at(0));
  else if (u.family == Family::T && u.root.size() == 3)
    again = t3_member(g, u.root[0], u.root[1], u.root[2], u.shapes.at(0).u.at(0),
                      u.shapes.at(1).u.at(0));
  if (!again) return false;
  return again->a == u.a && again->b == u.b && again->c == u.c && again->vertices == u.vertices;
}

// Is the located H member itself a hat / double hat (2-tree) or a one-hat /
// one-hat plus (3-tree) of the graph? The unavoidable-set lemmas need members
// that are not.
inline bool h_member_is_special_branch(const Graph& g, const Unavoidable& u) {
  require(u.family == Family::H, "only H members can coincide with a special branch");
  Branch b = extract_branch(g, u.root, u.apex);
  if (u.root.size() == 2) {
    ConfigKind k = classify_branch_2tree(g, b).kind;
    return k == ConfigKind::Hat || k == ConfigKind::DoubleHat;
  }
  ConfigKind k = classify_branch_3tree(g, b).kind;
  return k == ConfigKind::OneHat || k == ConfigKind::OneHatPlus;
}

}  // namespace oddkt
