#pragma once

// Hand-built hosts for the special branch shapes, used across the tests.

#include "oddkt/graph.hpp"

namespace oddkt::fixtures {

inline Graph complete_graph(int n) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < a; ++b) es.emplace_back(a, b);
  return build_graph(n, es);
}

// 2-tree grown as a path of triangles: vertex i >= 3 sits on edge (i-2, i-1).
inline Graph path_2tree(int n) {
  std::vector<std::pair<Vertex, Vertex>> es{{0, 1}, {1, 2}, {0, 2}};
  for (Vertex v = 3; v < n; ++v) {
    es.emplace_back(v, v - 1);
    es.emplace_back(v, v - 2);
  }
  return build_graph(n, es);
}

// hat on root edge (0,1) inside a triangle host {0,1,2}:
// u0=3, u1=4 (pends on 0), u2=5 (pends on 1)
inline Graph hat_host() {
  return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {4, 0}, {4, 3}, {5, 1}, {5, 3}});
}

// double hat on root edge (0,1) inside a triangle host {0,1,2}; labels follow
// the defining lists: u0=3, u1=4, u2=5, u3=6, u4=7, u5=8, u6=9
inline Graph double_hat_host() {
  return build_graph(10, {{0, 1}, {0, 2}, {1, 2},           // host triangle
                          {3, 0}, {3, 1},                   // u0
                          {4, 0}, {4, 3},                   // u1
                          {5, 1}, {5, 3},                   // u2
                          {6, 0}, {6, 4},                   // u3
                          {7, 3}, {7, 4},                   // u4
                          {8, 3}, {8, 5},                   // u5
                          {9, 1}, {9, 5}});                 // u6
}

// one-hat on root triangle {0,1,2} inside K4 host {0,1,2,3}: u0=4, u1=5
inline Graph one_hat_host() {
  return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {3, 2},
                         {4, 0}, {4, 1}, {4, 2}, {5, 0}, {5, 1}, {5, 4}});
}

// one-hat plus on root {0,1,2} inside K4 host: u0=4, u1=5, u2=6, u3=7
inline Graph one_hat_plus_host() {
  return build_graph(8, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {3, 2},
                         {4, 0}, {4, 1}, {4, 2},   // u0 on the root
                         {5, 0}, {5, 1}, {5, 4},   // u1
                         {6, 1}, {6, 2}, {6, 4},   // u2
                         {7, 0}, {7, 4}, {7, 5}}); // u3
}

}  // namespace oddkt::fixtures
