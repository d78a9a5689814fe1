#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "medexplain/constructions.hpp"
#include "medexplain/graph.hpp"
#include "medexplain/mdt.hpp"
#include "medexplain/symmap.hpp"

namespace medex {

// One prime vertex and the half-grid that replaced it.
struct Replacement {
  int tree_vertex = -1;              // MDT node index
  int graph_vertex = -1;             // the same vertex in the pvr graph
  std::vector<int> child_leaves;     // graph vertices acting as x_1..x_m
  std::map<std::pair<int, int>, int> grid;  // internal (i,j) -> graph vertex
};

struct PvrResult {
  MDTree tree;
  RootedLabeledGraph graph;
  std::vector<int> graph_vertex_of_node;  // MDT node -> graph vertex
  std::vector<Replacement> replacements;  // one per prime vertex, DFS order
};

// Expand the MDT into a rooted labeled median graph: every prime vertex v
// with m children is cut from its children and replaced by H^ext_m whose
// root is identified with v and whose leaves are identified with the
// children (sorted by smallest contained point).  Medians of the
// replacement are labeled by the local quotient map.
inline PvrResult pvr_expand(const SymMap& delta) {
  MDTree tree = compute_mdt(delta);
  RootedLabeledGraph graph;
  std::vector<int> vertex_of(tree.size(), -1);

  for (std::size_t v = 0; v < tree.size(); ++v) {
    const MDNode& node = tree.node(static_cast<int>(v));
    int gv = graph.add_vertex(tree.set_name(static_cast<int>(v)));
    vertex_of[v] = gv;
    graph.set_provenance(gv, "tree");
    if (node.is_leaf()) graph.bind_leaf(gv, node.members.first());
  }
  graph.set_root(vertex_of[tree.root()]);

  std::vector<Replacement> replacements;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    const MDNode& node = tree.node(static_cast<int>(v));
    if (node.is_leaf()) continue;

    if (!node.label.is_prime()) {
      graph.set_label(vertex_of[v], node.label.value);
      for (int c : node.children) graph.add_edge(vertex_of[v], vertex_of[c]);
      continue;
    }

    // Children are already in smallest-point order; they become x_1..x_m.
    int m = static_cast<int>(node.children.size());
    int n = m - 1;  // grid dimension of H^ext_m
    std::string tag = "G_p" + std::to_string(replacements.size());

    Replacement rep;
    rep.tree_vertex = static_cast<int>(v);
    rep.graph_vertex = vertex_of[v];
    for (int c : node.children) rep.child_leaves.push_back(vertex_of[c]);

    // Internal grid vertices of H_n; (1,n) is the prime vertex itself.
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (!halfgrid_contains(n, i, j)) continue;
        if (i == 1 && j == n) {
          rep.grid[{i, j}] = vertex_of[v];
          continue;
        }
        int gv = graph.add_vertex(tag + ":" + grid_id(i, j));
        graph.set_provenance(gv, tag);
        graph.set_coords(gv, j, -i);
        rep.grid[{i, j}] = gv;
      }
    }
    for (const auto& [coord, gv] : rep.grid) {
      auto [i, j] = coord;
      auto right = rep.grid.find({i, j + 1});
      if (right != rep.grid.end()) graph.add_edge(gv, right->second);
      auto down = rep.grid.find({i + 1, j});
      if (down != rep.grid.end()) graph.add_edge(gv, down->second);
    }
    graph.add_edge(rep.grid.at({1, 1}), rep.child_leaves[0]);
    graph.add_edge(rep.grid.at({n, n}), rep.child_leaves[m - 1]);
    for (int k = 2; k <= n; ++k)
      graph.add_edge(rep.grid.at({k, k - 1}), rep.child_leaves[k - 1]);

    // Quotient labels on the medians (i,j-1); the one at (1,n) labels the
    // prime vertex itself.
    for (int j = 2; j <= m; ++j) {
      for (int i = 1; i < j; ++i) {
        int px = tree.node(node.children[i - 1]).members.first();
        int py = tree.node(node.children[j - 1]).members.first();
        int lab = delta.label(px, py);
        GridCoord c = halfgrid_median_formula(i, j, n);
        int gv = rep.grid.at({c.i, c.j});
        if (graph.vertex(gv).label != kNoLabel && graph.vertex(gv).label != lab)
          throw std::logic_error("pvr: conflicting labels on a median");
        graph.set_label(gv, lab);
      }
    }
    replacements.push_back(std::move(rep));
  }

  return {std::move(tree), std::move(graph), std::move(vertex_of),
          std::move(replacements)};
}

inline std::size_t halfgrid_vertex_count(int n) {
  return static_cast<std::size_t>(n) * (n + 1) / 2 + n - 1;
}
inline std::size_t halfgrid_edge_count(int n) {
  return static_cast<std::size_t>(n - 1) * (n + 2);
}

// Predicted (vertices, edges) of the pvr graph from the MDT shape alone.
// A prime vertex with m children loses its m child edges and gains
// H_{m-1} minus its root plus the m leaf edges.
inline std::pair<std::size_t, std::size_t> pvr_size(const SymMap& delta) {
  MDTree tree = compute_mdt(delta);
  std::size_t vertices = tree.size();
  std::size_t edges = tree.size() - 1;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    const MDNode& node = tree.node(static_cast<int>(v));
    if (!node.label.is_prime()) continue;
    int m = static_cast<int>(node.children.size());
    vertices += halfgrid_vertex_count(m - 1) - 1;
    edges += halfgrid_edge_count(m - 1);  // -m child edges +m leaf edges
  }
  return {vertices, edges};
}

struct PvrCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct PvrReport {
  bool ok = true;
  std::vector<PvrCheck> checks;

  void add(std::string name, bool pass, std::string detail = "") {
    if (!pass) ok = false;
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

// Structural verification of a pvr result against its map: median graph,
// explains, predicted size, ancestor preservation, tree-path cut vertices,
// and the median-transfer identity for prime lcas.
inline PvrReport verify_pvr(const PvrResult& result, const SymMap& delta) {
  PvrReport report;
  const RootedLabeledGraph& g = result.graph;
  const MDTree& tree = result.tree;

  auto mc = g.is_median_graph();
  report.add("median-graph", mc.is_median,
             mc.is_median ? "" : "violating triple found");

  bool explains_ok = false;
  if (mc.is_median) {
    auto er = g.explains(delta);
    explains_ok = er.ok;
    std::string detail;
    if (!er.ok) {
      detail = std::to_string(er.mismatches.size()) + " mismatches, " +
               std::to_string(er.unlabeled.size()) + " unlabeled medians";
    }
    report.add("explains", er.ok, detail);
  } else {
    report.add("explains", false, "skipped: not a median graph");
  }
  (void)explains_ok;

  auto predicted = pvr_size(delta);
  bool size_ok = predicted.first == g.num_vertices() &&
                 predicted.second == g.num_edges();
  report.add("predicted-size", size_ok,
             "predicted " + std::to_string(predicted.first) + "/" +
                 std::to_string(predicted.second) + " actual " +
                 std::to_string(g.num_vertices()) + "/" +
                 std::to_string(g.num_edges()));

  // u below v in the tree stays below v in the pvr graph.
  bool anc_ok = true;
  for (std::size_t u = 0; u < tree.size() && anc_ok; ++u) {
    for (int v = tree.node(static_cast<int>(u)).parent; v != -1;
         v = tree.node(v).parent) {
      if (!g.ancestor_leq(result.graph_vertex_of_node[u],
                          result.graph_vertex_of_node[v])) {
        anc_ok = false;
        break;
      }
    }
  }
  report.add("ancestor-preservation", anc_ok);

  // Every vertex on the tree path between comparable tree vertices is a cut
  // vertex between them in the pvr graph (checked for leaf-to-root paths).
  bool path_ok = true;
  for (int p = 0; p < delta.size() && path_ok; ++p) {
    int leaf = tree.leaf_of_point(p);
    for (int v = tree.node(leaf).parent; v != -1; v = tree.node(v).parent) {
      int gleaf = result.graph_vertex_of_node[leaf];
      int gv = result.graph_vertex_of_node[v];
      if (!g.ancestor_leq(gleaf, gv)) {
        path_ok = false;
        break;
      }
    }
  }
  report.add("tree-path-vertices", path_ok);

  // Prime lca pairs: med(rho,x,y) = med(v,v_x,v_y) = formula vertex of G_v.
  bool transfer_ok = true;
  std::string transfer_detail;
  if (mc.is_median) {
    std::map<int, const Replacement*> rep_of_node;
    for (const auto& r : result.replacements) rep_of_node[r.tree_vertex] = &r;
    for (int qy = 1; qy < delta.size() && transfer_ok; ++qy) {
      for (int qx = 0; qx < qy; ++qx) {
        int v = tree.lca_of_points(qx, qy);
        if (!tree.node(v).label.is_prime()) continue;
        const Replacement& rep = *rep_of_node.at(v);
        const auto& children = tree.node(v).children;
        int ci = -1, cj = -1;
        for (std::size_t k = 0; k < children.size(); ++k) {
          if (tree.node(children[k]).members.contains(qx)) ci = static_cast<int>(k);
          if (tree.node(children[k]).members.contains(qy)) cj = static_cast<int>(k);
        }
        if (ci > cj) std::swap(ci, cj);
        GridCoord c = halfgrid_median_formula(
            ci + 1, cj + 1, static_cast<int>(children.size()) - 1);
        int expect = rep.grid.at({c.i, c.j});
        int lx = g.leaf_of_point(qx), ly = g.leaf_of_point(qy);
        int got = g.median(g.root(), lx, ly).median;
        int local = g.median(rep.graph_vertex, rep.child_leaves[ci],
                             rep.child_leaves[cj]).median;
        if (got != expect || local != expect) {
          transfer_ok = false;
          transfer_detail = "pair (" + delta.point_name(qx) + "," +
                            delta.point_name(qy) + ")";
          break;
        }
      }
    }
  }
  report.add("median-transfer", transfer_ok, transfer_detail);

  return report;
}

}  // namespace medex
