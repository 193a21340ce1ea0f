#pragma once

#include <optional>

#include "oddkt/graph.hpp"

namespace oddkt {

// Total coloring with colors in [1, palette].
struct Coloring {
  int palette = 0;
  std::vector<int> color;  // color[v] in [1, palette]

  int max_color_used() const {
    int c = 0;
    for (int x : color) c = std::max(c, x);
    return c;
  }
};

inline void check_total(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.color.size()) != g.n)
    throw BuildError("coloring does not cover all vertices");
  for (Vertex v = 0; v < g.n; ++v)
    if (c.color[v] < 1 || c.color[v] > c.palette)
      throw BuildError("vertex " + std::to_string(v) + " has color " +
                       std::to_string(c.color[v]) + " outside [1," +
                       std::to_string(c.palette) + "]");
}

struct ProperCheck {
  bool ok = true;
  Vertex u = -1, v = -1;  // first violating edge when !ok
};

inline ProperCheck verify_proper(const Graph& g, const Coloring& c) {
  check_total(g, c);
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v : g.adj[u])
      if (u < v && c.color[u] == c.color[v]) return {false, u, v};
  return {};
}

enum class OddStatus { Witnessed, Fail, Exempt };

struct OddReport {
  bool all_ok = true;                  // every non-isolated vertex has a witness
  std::vector<OddStatus> status;
  std::vector<int> witness;            // smallest witnessing color, 0 if none

  std::vector<Vertex> failing() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<int>(status.size()); ++v)
      if (status[v] == OddStatus::Fail) out.push_back(v);
    return out;
  }
};

// Smallest color appearing an odd number of times in N(v), if any.
inline std::optional<int> odd_condition_witness(const Graph& g, const Coloring& c, Vertex v) {
  check_total(g, c);
  std::vector<int> count(c.palette + 1, 0);
  for (Vertex w : g.adj[v]) ++count[c.color[w]];
  int sum = 0;
  for (int col = 1; col <= c.palette; ++col) sum += count[col];
  require(sum == g.degree(v), "color class sizes around a vertex must add up to its degree");
  for (int col = 1; col <= c.palette; ++col)
    if (count[col] % 2 == 1) return col;
  return std::nullopt;
}

inline OddReport verify_odd(const Graph& g, const Coloring& c) {
  auto proper = verify_proper(g, c);
  if (!proper.ok)
    throw NotProper("coloring is not proper: edge (" + std::to_string(proper.u) + "," +
                    std::to_string(proper.v) + ") is monochromatic");
  OddReport rep;
  rep.status.assign(g.n, OddStatus::Fail);
  rep.witness.assign(g.n, 0);
  std::vector<int> count(c.palette + 1, 0);
  for (Vertex v = 0; v < g.n; ++v) {
    if (g.degree(v) == 0) {
      rep.status[v] = OddStatus::Exempt;
      continue;
    }
    for (Vertex w : g.adj[v]) ++count[c.color[w]];
    int sum = 0;
    for (int col = 1; col <= c.palette; ++col) sum += count[col];
    require(sum == g.degree(v), "color class sizes around a vertex must add up to its degree");
    for (int col = 1; col <= c.palette; ++col) {
      if (count[col] % 2 == 1 && rep.witness[v] == 0) {
        rep.witness[v] = col;
        rep.status[v] = OddStatus::Witnessed;
      }
      count[col] = 0;
    }
    if (rep.status[v] == OddStatus::Fail) rep.all_ok = false;
  }
  return rep;
}

inline bool is_odd_coloring(const Graph& g, const Coloring& c) {
  return verify_proper(g, c).ok && verify_odd(g, c).all_ok;
}

// Colors every vertex with its own color. Proper, and odd because every
// neighborhood color class has size exactly one.
inline Coloring all_distinct_coloring(const Graph& g, int palette) {
  require(g.n <= palette, "all-distinct coloring needs palette >= n");
  Coloring c;
  c.palette = palette;
  c.color.resize(g.n);
  for (Vertex v = 0; v < g.n; ++v) c.color[v] = v + 1;
  return c;
}

// ---- coloring file format: "palette c" line then one "v color" line per vertex ----

inline Coloring parse_coloring(std::istream& in) {
  std::string line;
  int palette = -1;
  std::vector<std::pair<long long, long long>> entries;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "palette") {
      if (!(ls >> palette) || palette < 1) throw ParseError("coloring: bad palette line");
    } else {
      long long v, col;
      std::istringstream again(line);
      if (!(again >> v >> col)) throw ParseError("coloring: bad entry line \"" + line + "\"");
      entries.emplace_back(v, col);
    }
  }
  if (palette < 1) throw ParseError("coloring: missing \"palette c\" line");
  long long n = 0;
  for (auto& [v, col] : entries) n = std::max(n, v + 1);
  Coloring c;
  c.palette = palette;
  c.color.assign(static_cast<std::size_t>(n), 0);
  for (auto& [v, col] : entries) {
    if (v < 0 || col < 1 || col > palette) throw ParseError("coloring: entry out of range");
    c.color[static_cast<std::size_t>(v)] = static_cast<int>(col);
  }
  for (std::size_t v = 0; v < c.color.size(); ++v)
    if (c.color[v] == 0) throw ParseError("coloring: vertex " + std::to_string(v) + " missing");
  return c;
}

inline void format_coloring(std::ostream& out, const Coloring& c) {
  out << "palette " << c.palette << '\n';
  for (std::size_t v = 0; v < c.color.size(); ++v) out << v << ' ' << c.color[v] << '\n';
}

}  // namespace oddkt
