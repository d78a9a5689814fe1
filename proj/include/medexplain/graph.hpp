#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "medexplain/symmap.hpp"

namespace medex {

struct GraphError : std::runtime_error {
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};
struct Disconnected : GraphError {
  Disconnected() : GraphError("graph is not connected") {}
};
struct NotMedianGraph : GraphError {
  NotMedianGraph() : GraphError("graph is not a median graph") {}
};
struct PointAlreadyBound : GraphError {
  explicit PointAlreadyBound(const std::string& p)
      : GraphError("point '" + p + "' already bound to a leaf") {}
};

constexpr int kNoLabel = -1;
constexpr int kNoPoint = -1;
constexpr int kUnreachable = std::numeric_limits<int>::max();

struct GraphVertex {
  std::string id;
  int point = kNoPoint;   // bound point index, for designated leaves
  int label = kNoLabel;   // alphabet id, kNoLabel if unlabeled
  std::string provenance;
  double x = 0.0, y = 0.0;
  bool has_coords = false;
};

// Either the unique median of a triple or a violation witness.
struct MedianCertificate {
  bool unique = false;
  int median = -1;
  int u = -1, v = -1, w = -1;
  std::vector<int> common;  // all vertices in the triple interval intersection
};

struct MedianCheck {
  bool is_median = true;
  MedianCertificate witness;
};

struct ExplainReport {
  bool ok = true;
  // mismatches: (point x, point y, expected label, found label or kNoLabel)
  std::vector<std::array<int, 4>> mismatches;
  std::vector<std::pair<int, int>> unlabeled;
};

// Rooted undirected simple graph with a designated leaf set (leaf -> point
// binding) and a partial vertex labeling.  Mutating methods reset the cached
// distance table; all queries are pure reads afterwards.
class RootedLabeledGraph {
 public:
  int add_vertex(std::string id) {
    int v = static_cast<int>(verts_.size());
    verts_.push_back({std::move(id)});
    adj_.emplace_back();
    dirty_ = true;
    return v;
  }

  void add_edge(int u, int v) {
    if (u == v) throw GraphError("loop edge rejected");
    if (has_edge(u, v)) throw GraphError("multi-edge rejected");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    dirty_ = true;
  }

  bool has_edge(int u, int v) const {
    return std::find(adj_.at(u).begin(), adj_.at(u).end(), v) != adj_.at(u).end();
  }

  void set_root(int v) { root_ = v; }
  int root() const { return root_; }

  void bind_leaf(int v, int point) { verts_.at(v).point = point; }
  void set_label(int v, int label) { verts_.at(v).label = label; }
  void set_provenance(int v, std::string tag) { verts_.at(v).provenance = std::move(tag); }
  void set_coords(int v, double x, double y) {
    verts_.at(v).x = x;
    verts_.at(v).y = y;
    verts_.at(v).has_coords = true;
  }

  std::size_t num_vertices() const { return verts_.size(); }
  std::size_t num_edges() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d += a.size();
    return d / 2;
  }

  const GraphVertex& vertex(int v) const { return verts_.at(v); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  std::size_t degree(int v) const { return adj_.at(v).size(); }

  std::optional<int> find_vertex(const std::string& id) const {
    for (std::size_t v = 0; v < verts_.size(); ++v)
      if (verts_[v].id == id) return static_cast<int>(v);
    return std::nullopt;
  }

  // Bound leaves sorted by point index.
  std::vector<int> bound_leaves() const {
    std::vector<int> out;
    for (std::size_t v = 0; v < verts_.size(); ++v)
      if (verts_[v].point != kNoPoint) out.push_back(static_cast<int>(v));
    std::sort(out.begin(), out.end(), [&](int a, int b) {
      return verts_[a].point < verts_[b].point;
    });
    return out;
  }

  int leaf_of_point(int point) const {
    for (std::size_t v = 0; v < verts_.size(); ++v)
      if (verts_[v].point == point) return static_cast<int>(v);
    throw GraphError("point not bound to any leaf");
  }

  std::vector<int> distances_from(int s) const {
    std::vector<int> dist(verts_.size(), kUnreachable);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj_[u]) {
        if (dist[v] == kUnreachable) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return dist;
  }

  bool connected() const {
    if (verts_.empty()) return true;
    auto dist = distances_from(0);
    return std::all_of(dist.begin(), dist.end(),
                       [](int d) { return d != kUnreachable; });
  }

  const std::vector<std::vector<int>>& all_pairs_distances() const {
    if (dirty_) {
      apsp_.clear();
      apsp_.reserve(verts_.size());
      for (std::size_t s = 0; s < verts_.size(); ++s)
        apsp_.push_back(distances_from(static_cast<int>(s)));
      anc_cache_.assign(verts_.size(), {});
      median_cache_ = -1;
      dirty_ = false;
    }
    return apsp_;
  }

  int distance(int u, int v) const { return all_pairs_distances()[u][v]; }

  std::vector<int> interval(int x, int y) const {
    const auto& d = all_pairs_distances();
    std::vector<int> out;
    for (std::size_t v = 0; v < verts_.size(); ++v)
      if (d[x][v] + d[v][y] == d[x][y]) out.push_back(static_cast<int>(v));
    return out;
  }

  MedianCertificate median(int u, int v, int w) const {
    const auto& d = all_pairs_distances();
    MedianCertificate cert;
    cert.u = u;
    cert.v = v;
    cert.w = w;
    for (std::size_t m = 0; m < verts_.size(); ++m) {
      int x = static_cast<int>(m);
      if (d[u][x] + d[x][v] == d[u][v] && d[u][x] + d[x][w] == d[u][w] &&
          d[v][x] + d[x][w] == d[v][w])
        cert.common.push_back(x);
    }
    if (cert.common.size() == 1) {
      cert.unique = true;
      cert.median = cert.common[0];
    }
    return cert;
  }

  // Definitional O(|V|^3) triple check.  Triples with repeated vertices
  // always have a unique median, so distinct triples suffice.
  MedianCheck is_median_graph() const {
    if (!connected()) throw Disconnected();
    const auto& d = all_pairs_distances();
    if (median_cache_ == 1) return {};
    int n = static_cast<int>(verts_.size());
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        for (int w = v + 1; w < n; ++w) {
          int count = 0;
          for (int x = 0; x < n; ++x) {
            if (d[u][x] + d[x][v] == d[u][v] && d[u][x] + d[x][w] == d[u][w] &&
                d[v][x] + d[x][w] == d[v][w])
              ++count;
          }
          if (count != 1) {
            median_cache_ = 0;
            return {false, median(u, v, w)};
          }
        }
      }
    }
    median_cache_ = 1;
    return {};
  }

  // V_{med,L}: medians of the root with all distinct bound leaf pairs.
  std::vector<int> median_set() const {
    if (!is_median_graph().is_median) throw NotMedianGraph();
    auto leaves = bound_leaves();
    std::vector<bool> in(verts_.size(), false);
    for (std::size_t j = 1; j < leaves.size(); ++j)
      for (std::size_t i = 0; i < j; ++i) {
        if (leaves[i] == root_ || leaves[j] == root_) continue;
        in[median(root_, leaves[i], leaves[j]).median] = true;
      }
    std::vector<int> out;
    for (std::size_t v = 0; v < verts_.size(); ++v)
      if (in[v]) out.push_back(static_cast<int>(v));
    return out;
  }

  // delta(x,y) == t(med(root,x,y)) for all distinct bound leaf pairs.
  ExplainReport explains(const SymMap& delta) const {
    if (!is_median_graph().is_median) throw NotMedianGraph();
    auto leaves = bound_leaves();
    if (leaves.size() != static_cast<std::size_t>(delta.size()))
      throw GraphError("leaf binding does not cover the point set");
    ExplainReport report;
    for (std::size_t j = 1; j < leaves.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        int px = verts_[leaves[i]].point, py = verts_[leaves[j]].point;
        int m = median(root_, leaves[i], leaves[j]).median;
        int expect = delta.label(px, py);
        int got = verts_[m].label;
        if (got == kNoLabel) {
          report.ok = false;
          report.unlabeled.emplace_back(px, py);
        } else if (got != expect) {
          report.ok = false;
          report.mismatches.push_back({px, py, expect, got});
        }
      }
    }
    return report;
  }

  // u is below v: v lies on some root-u path, i.e. u == v, v == root, or
  // removing v separates u from the root.  Per-vertex reachability cached.
  bool ancestor_leq(int u, int v) const {
    if (u == v || v == root_) return true;
    if (u == root_) return false;
    all_pairs_distances();  // ensure anc_cache_ sized
    auto& reach = anc_cache_[v];
    if (reach.empty()) {
      reach.assign(verts_.size(), 0);
      std::deque<int> queue{root_};
      reach[root_] = 1;
      while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int b : adj_[a]) {
          if (b == v || reach[b]) continue;
          reach[b] = 1;
          queue.push_back(b);
        }
      }
    }
    return !reach[u];
  }

  int leaf_append(int v, int point, std::string id) {
    for (const auto& vert : verts_)
      if (vert.point == point) throw PointAlreadyBound(vert.id);
    int leaf = add_vertex(std::move(id));
    add_edge(v, leaf);
    bind_leaf(leaf, point);
    return leaf;
  }

 private:
  std::vector<GraphVertex> verts_;
  std::vector<std::vector<int>> adj_;
  int root_ = -1;
  mutable std::vector<std::vector<int>> apsp_;
  mutable std::vector<std::vector<char>> anc_cache_;
  mutable int median_cache_ = -1;  // -1 unknown, 0 no, 1 yes
  mutable bool dirty_ = true;
};

// Edge list as (min,max) index pairs, sorted; the canonical edge order for
// serialization and rebuilds.
inline std::vector<std::pair<int, int>> sorted_edges(
    const RootedLabeledGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < g.num_vertices(); ++u)
    for (int v : g.neighbors(static_cast<int>(u)))
      if (static_cast<int>(u) < v) edges.emplace_back(static_cast<int>(u), v);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace medex
