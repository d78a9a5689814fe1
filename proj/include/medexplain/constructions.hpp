#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "medexplain/graph.hpp"
#include "medexplain/symmap.hpp"

namespace medex {

struct OutOfRange : GraphError {
  OutOfRange() : GraphError("grid coordinate out of range") {}
};
struct DimensionCapExceeded : GraphError {
  explicit DimensionCapExceeded(int n, int cap)
      : GraphError("hypercube dimension " + std::to_string(n) +
                   " exceeds cap " + std::to_string(cap)) {}
};

struct GridCoord {
  int i = 0, j = 0;
  friend bool operator==(GridCoord a, GridCoord b) {
    return a.i == b.i && a.j == b.j;
  }
};

// (i,j) belongs to the half-grid H_n iff i=1 and 1<=j<=n, or 2<=i<=n and
// i-1<=j<=n.
inline bool halfgrid_contains(int n, int i, int j) {
  if (j < 1 || j > n) return false;
  if (i == 1) return true;
  return i >= 2 && i <= n && j >= i - 1;
}

inline std::string grid_id(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

struct HalfGridGraph {
  RootedLabeledGraph graph;
  int n = 0;
  std::map<std::pair<int, int>, int> at;  // (i,j) -> vertex index
  std::vector<int> leaves;                // x_1..x_{n+1} when extended

  int vertex_at(int i, int j) const { return at.at({i, j}); }
};

inline HalfGridGraph half_grid(int n) {
  if (n < 2) throw GraphError("half-grid needs n >= 2");
  HalfGridGraph hg;
  hg.n = n;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (!halfgrid_contains(n, i, j)) continue;
      int v = hg.graph.add_vertex(grid_id(i, j));
      hg.graph.set_coords(v, j, -i);
      hg.at[{i, j}] = v;
    }
  }
  for (const auto& [coord, v] : hg.at) {
    auto [i, j] = coord;
    auto right = hg.at.find({i, j + 1});
    if (right != hg.at.end()) hg.graph.add_edge(v, right->second);
    auto down = hg.at.find({i + 1, j});
    if (down != hg.at.end()) hg.graph.add_edge(v, down->second);
  }
  return hg;
}

// H^ext_{n+1}: H_n plus leaves x_1 at (1,1), x_{n+1} at (n,n) and x_j at
// (j,j-1) for 2<=j<=n; rooted at (1,n).  Leaf k is bound to point k-1.
inline HalfGridGraph extended_half_grid(const std::vector<std::string>& names) {
  int n = static_cast<int>(names.size()) - 1;
  if (n < 2) throw GraphError("extended half-grid needs at least 3 leaves");
  HalfGridGraph hg = half_grid(n);
  hg.leaves.resize(names.size());
  auto attach = [&](int k, int i, int j) {
    int leaf = hg.graph.leaf_append(hg.vertex_at(i, j), k - 1, names[k - 1]);
    hg.graph.set_coords(leaf, j - 0.4, -i - 0.4);
    hg.leaves[k - 1] = leaf;
  };
  attach(1, 1, 1);
  attach(n + 1, n, n);
  for (int j = 2; j <= n; ++j) attach(j, j, j - 1);
  hg.graph.set_root(hg.vertex_at(1, n));
  return hg;
}

// med_{H^ext_{n+1}}(rho, x_i, x_j) = (i, j-1) for 1 <= i < j <= n+1.
inline GridCoord halfgrid_median_formula(int i, int j, int n) {
  if (i < 1 || j <= i || j > n + 1) throw OutOfRange();
  return {i, j - 1};
}

struct CubeGraph {
  RootedLabeledGraph graph;
  int n = 0;
  std::vector<int> vertex_of_mask;  // 2^n entries
  std::vector<int> leaves;          // x_1..x_n when extended

  int vertex_at(std::uint32_t mask) const { return vertex_of_mask.at(mask); }
};

inline std::string cube_id(std::uint32_t mask, int n) {
  std::string s(n, '0');
  for (int b = 0; b < n; ++b)
    if (mask & (1u << b)) s[b] = '1';
  return s;
}

inline CubeGraph hypercube(int n) {
  if (n < 1) throw GraphError("hypercube needs n >= 1");
  if (n > 26) throw DimensionCapExceeded(n, 26);
  CubeGraph cube;
  cube.n = n;
  std::uint32_t size = 1u << n;
  cube.vertex_of_mask.resize(size);
  // Layered layout hint: x = popcount level, y = rank within the level.
  std::vector<int> rank(n + 1, 0);
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    int v = cube.graph.add_vertex(cube_id(mask, n));
    cube.vertex_of_mask[mask] = v;
    int level = std::popcount(mask);
    cube.graph.set_coords(v, level, rank[level]++);
  }
  for (std::uint32_t mask = 0; mask < size; ++mask)
    for (int b = 0; b < n; ++b)
      if (!(mask & (1u << b)))
        cube.graph.add_edge(cube.vertex_of_mask[mask],
                            cube.vertex_of_mask[mask | (1u << b)]);
  return cube;
}

// Q^ext_n: Q_n plus one leaf per coordinate, x_i appended to the unit vector
// e_i; rooted at the all-ones vertex.  Leaf i is bound to point i-1.
inline CubeGraph extended_hypercube(const std::vector<std::string>& names) {
  int n = static_cast<int>(names.size());
  if (n < 2) throw GraphError("extended hypercube needs at least 2 leaves");
  CubeGraph cube = hypercube(n);
  cube.leaves.resize(n);
  for (int i = 0; i < n; ++i) {
    int anchor = cube.vertex_at(1u << i);
    cube.leaves[i] = cube.graph.leaf_append(anchor, i, names[i]);
  }
  cube.graph.set_root(cube.vertex_at((1u << n) - 1));
  return cube;
}

// Rooted star used for two-point maps: one labeled inner vertex (the root)
// with both points leaf-appended.
inline RootedLabeledGraph two_point_star(const SymMap& delta) {
  RootedLabeledGraph g;
  int center = g.add_vertex("*");
  g.set_root(center);
  g.leaf_append(center, 0, delta.point_name(0));
  g.leaf_append(center, 1, delta.point_name(1));
  g.set_label(center, delta.label(0, 1));
  return g;
}

// Labeled extended half-grid explaining delta; t(med(rho,x_i,x_j)) is the
// formula vertex (i,j-1), well-defined because each such vertex is the
// median of exactly one leaf pair.
inline RootedLabeledGraph explain_by_halfgrid(const SymMap& delta) {
  int n = delta.size();
  if (n < 2) throw MapError("explain needs at least 2 points");
  if (n == 2) return two_point_star(delta);
  HalfGridGraph hg = extended_half_grid(delta.point_names());
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      GridCoord m = halfgrid_median_formula(i, j, n - 1);
      int v = hg.vertex_at(m.i, m.j);
      int lab = delta.label(i - 1, j - 1);
      if (hg.graph.vertex(v).label != kNoLabel && hg.graph.vertex(v).label != lab)
        throw std::logic_error("half-grid median labeled twice");
      hg.graph.set_label(v, lab);
    }
  }
  return std::move(hg.graph);
}

// Labeled extended hypercube explaining delta; med(rho,x_i,x_j) is the
// vertex whose only 1-bits are i and j.
inline RootedLabeledGraph explain_by_hypercube(const SymMap& delta,
                                               int dimension_cap = 12) {
  int n = delta.size();
  if (n < 2) throw MapError("explain needs at least 2 points");
  if (n > dimension_cap) throw DimensionCapExceeded(n, dimension_cap);
  CubeGraph cube = extended_hypercube(delta.point_names());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      cube.graph.set_label(cube.vertex_at((1u << i) | (1u << j)),
                           delta.label(i, j));
  return std::move(cube.graph);
}

}  // namespace medex
