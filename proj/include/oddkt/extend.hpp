#pragma once

#include "oddkt/configs.hpp"
#include "oddkt/partial_coloring.hpp"

namespace oddkt {

// Extension step for 2-trees. The branch root must be colored with two distinct
// colors. Colors the whole interior so that the fixed root vertex and every
// interior vertex are witnessed; the spared root vertex may lose its witness.
// Recipe colors are mapped onto the actual root colors (1,2) and the two free
// colors (3,4).
inline void extend_near_odd_2(PartialColoring& pc, const BranchShape& shape, Vertex spared_root) {
  require(shape.kind == ConfigKind::Ear2 || shape.kind == ConfigKind::Hat ||
              shape.kind == ConfigKind::DoubleHat,
          "2-tree extension needs an ear, hat, or double hat");
  BranchShape s = oriented_2shape(shape, spared_root);
  Vertex v2 = s.root[1];
  ColorMap m = make_color_map(pc, s.root);
  if (s.kind == ConfigKind::Ear2) {
    choose_color_avoiding(pc, s.u[0], m.map_all({3, 4}), {v2});
  } else if (s.kind == ConfigKind::Hat) {
    pc.assign(s.u[0], m.map(3));
    choose_color_avoiding(pc, s.u[2], m.map_all({1, 4}), {v2});
    choose_color_avoiding(pc, s.u[1], m.map_all({2, 4}), {s.u[0]});
  } else {
    const auto& u = s.u;
    pc.assign(u[0], m.map(3));
    pc.assign(u[1], m.map(4));
    pc.assign(u[2], m.map(4));
    choose_color_avoiding(pc, u[6], m.map_all({1, 3}), {v2});
    choose_color_avoiding(pc, u[5], m.map_all({1, 2}), {u[2]});
    choose_color_avoiding(pc, u[4], m.map_all({1, 2}), {u[0]});
    choose_color_avoiding(pc, u[3], m.map_all({2, 3}), {u[1]});
  }
  for (Vertex x : s.u)
    require(pc.witnessed(x), "extension must leave the branch interior witnessed");
  require(pc.witnessed(v2), "extension must leave the fixed root vertex witnessed");
}

// Extension step for 3-trees, ear case: the interior vertex can repair exactly
// one root vertex, so the caller names the root to fix (sparing the other two).
inline void extend_near_odd_3_ear(PartialColoring& pc, const BranchShape& shape,
                                  Vertex fixed_root) {
  require(shape.kind == ConfigKind::Ear3, "ear extension needs an ear");
  ColorMap m = make_color_map(pc, shape.root);
  choose_color_avoiding(pc, shape.u[0], m.map_all({4, 5}), {fixed_root});
  require(pc.witnessed(shape.u[0]), "ear apex must be witnessed after extension");
}

// Extension step for 3-trees, one-hat and one-hat-plus cases: colors the whole
// interior so that all root vertices except the spared one, and every interior
// vertex, are witnessed.
inline void extend_near_odd_3(PartialColoring& pc, const BranchShape& shape, Vertex spared_root) {
  if (shape.kind == ConfigKind::OneHat) {
    Vertex r1 = shape.root[0], r2 = shape.root[1], r3 = shape.root[2];
    Vertex u0 = shape.u[0], u1 = shape.u[1];
    ColorMap m = make_color_map(pc, shape.root);
    if (spared_root == r3) {
      // Both pendant-adjacent roots need fixing: each rules out at most one of
      // the three distinct color pairs.
      std::vector<std::pair<int, int>> pairs = {{m.map(4), m.map(3)},
                                                {m.map(4), m.map(5)},
                                                {m.map(5), m.map(3)}};
      choose_pair_avoiding(pc, u0, u1, pairs, {r1, r2});
    } else {
      require(spared_root == r1 || spared_root == r2, "spared vertex must be a root");
      Vertex other = spared_root == r1 ? r2 : r1;
      choose_color_avoiding(pc, u0, m.map_all({4, 5}), {r3});
      choose_color_avoiding(pc, u1, m.map_all({3, 4, 5}), {other});
    }
    for (Vertex x : shape.u)
      require(pc.witnessed(x), "one-hat interior must be witnessed after extension");
    for (Vertex r : shape.root)
      if (r != spared_root)
        require(pc.witnessed(r), "one-hat extension must keep the non-spared roots witnessed");
    return;
  }
  require(shape.kind == ConfigKind::OneHatPlus, "3-tree extension needs a one-hat or plus");
  Vertex v1 = shape.root[0], v2 = shape.root[1], v3 = shape.root[2];
  Vertex u0 = shape.u[0], u1 = shape.u[1], u2 = shape.u[2], u3 = shape.u[3];
  ColorMap m = make_color_map(pc, shape.root);
  BranchShape inner;
  inner.kind = ConfigKind::OneHat;
  inner.root = {v1, u0, v2};  // u3 touches v1 and u0; v2 is the lone third root
  inner.u = {u1, u3};
  if (spared_root == v1 || spared_root == v2) {
    pc.assign(u0, m.map(4));
    choose_color_avoiding(pc, u2, m.map_all({1, 5}), {v3});
    extend_near_odd_3(pc, inner, spared_root);
  } else {
    require(spared_root == v3, "spared vertex must be a root");
    pc.assign(u0, m.map(4));
    pc.assign(u2, m.map(5));
    extend_near_odd_3(pc, inner, u0);
    // Six neighbors carrying at least four distinct colors leave some color
    // class of odd size.
    require(pc.witnessed(u0), "plus center must be witnessed in the third variant");
  }
  for (Vertex x : shape.u)
    require(pc.witnessed(x), "one-hat-plus interior must be witnessed after extension");
  for (Vertex r : shape.root)
    if (r != spared_root)
      require(pc.witnessed(r), "one-hat-plus extension must keep the non-spared roots witnessed");
}

}  // namespace oddkt
