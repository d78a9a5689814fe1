#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "medexplain/point_set.hpp"
#include "medexplain/symmap.hpp"

namespace medex {

struct TooFewPoints : MapError {
  TooFewPoints() : MapError("maximal strong partition needs at least 2 points") {}
};
struct NotAHierarchy : MapError {
  NotAHierarchy(const std::string& a, const std::string& b)
      : MapError("sets " + a + " and " + b + " overlap") {}
};

// Inner-vertex label: an alphabet id, the prime marker, or none (leaves and
// unlabeled trees).
struct NodeLabel {
  static constexpr int kNone = -1;
  static constexpr int kPrime = -2;
  int value = kNone;

  bool is_prime() const { return value == kPrime; }
  bool has_label() const { return value >= 0; }
};

struct MDNode {
  PointSet members;
  int parent = -1;
  std::vector<int> children;
  NodeLabel label;

  bool is_leaf() const { return children.empty(); }
};

// Rooted tree over the strong modules of a map.  Node 0 is the root (the
// full point set); children are ordered by smallest contained point index.
class MDTree {
 public:
  MDTree(std::vector<std::string> point_names, std::vector<MDNode> nodes)
      : point_names_(std::move(point_names)), nodes_(std::move(nodes)) {
    leaf_of_point_.assign(point_names_.size(), -1);
    for (std::size_t v = 0; v < nodes_.size(); ++v)
      if (nodes_[v].is_leaf()) leaf_of_point_[nodes_[v].members.first()] = static_cast<int>(v);
  }

  int root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const MDNode& node(int v) const { return nodes_.at(v); }
  const std::vector<std::string>& point_names() const { return point_names_; }
  int leaf_of_point(int p) const { return leaf_of_point_.at(p); }

  int lca_of_points(int p, int q) const {
    int u = leaf_of_point(p), v = leaf_of_point(q);
    // Walk up from u marking ancestors, then from v.
    std::vector<int> anc;
    for (int w = u; w != -1; w = nodes_[w].parent) anc.push_back(w);
    for (int w = v; w != -1; w = nodes_[w].parent)
      if (std::find(anc.begin(), anc.end(), w) != anc.end()) return w;
    return root();
  }

  std::vector<PointSet> vertex_sets() const {
    std::vector<PointSet> out;
    out.reserve(nodes_.size());
    for (const auto& n : nodes_) out.push_back(n.members);
    return out;
  }

  bool has_prime_vertex() const {
    for (const auto& n : nodes_)
      if (n.label.is_prime()) return true;
    return false;
  }

  std::size_t prime_vertex_count() const {
    std::size_t c = 0;
    for (const auto& n : nodes_)
      if (n.label.is_prime()) ++c;
    return c;
  }

  std::string set_name(int v) const {
    const MDNode& n = nodes_.at(v);
    if (n.is_leaf()) return point_names_[n.members.first()];
    std::string s = "{";
    for (int m : n.members.members()) {
      if (s.size() > 1) s += ",";
      s += point_names_[m];
    }
    return s + "}";
  }

 private:
  std::vector<std::string> point_names_;
  std::vector<MDNode> nodes_;
  std::vector<int> leaf_of_point_;
};

struct StrongPartition {
  std::vector<PointSet> parts;  // sorted by smallest point index
  bool prime = false;
  int label = NodeLabel::kNone;  // the complete label when !prime
};

namespace detail {

// Connected components of the graph on `points` with edges wherever
// delta != avoid_label.  Returns the component sets (indices into delta).
inline std::vector<PointSet> components_avoiding(const SymMap& delta,
                                                 int avoid_label) {
  int n = delta.size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = ncomp;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (comp[v] != -1 || v == u) continue;
        if (delta.label(u, v) != avoid_label) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }
  std::vector<PointSet> out(ncomp, PointSet(n));
  for (int v = 0; v < n; ++v) out[comp[v]].insert(v);
  return out;
}

}  // namespace detail

// The unique partition of X into maximal proper strong modules, together
// with the complete/prime classification of the quotient.  A label i whose
// "!= i" graph is disconnected makes the quotient complete with label i and
// its components are the parts; at most one label can disconnect, which is
// asserted.  Otherwise the quotient is prime and the part of v is the union
// of all proper minimal modules through v.
inline StrongPartition maximal_strong_partition(const SymMap& delta) {
  int n = delta.size();
  if (n < 2) throw TooFewPoints();

  StrongPartition result;
  int disconnecting = NodeLabel::kNone;
  for (int lab : delta.labels_present()) {
    auto comps = detail::components_avoiding(delta, lab);
    if (comps.size() > 1) {
      if (disconnecting != NodeLabel::kNone)
        throw std::logic_error("two labels disconnect the complement graph");
      disconnecting = lab;
      result.parts = std::move(comps);
      result.label = lab;
      if (n == 2) break;  // the uniqueness argument needs |X| >= 3
    }
  }
  if (disconnecting != NodeLabel::kNone) {
    std::sort(result.parts.begin(), result.parts.end(),
              [](const PointSet& a, const PointSet& b) {
                return a.first() < b.first();
              });
    return result;
  }

  result.prime = true;
  std::vector<bool> assigned(n, false);
  for (int v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    PointSet part(n);
    part.insert(v);
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      PointSet mm = minimal_module(delta, v, w);
      if (mm.count() < static_cast<std::size_t>(n)) part.unite(mm);
    }
    for (int m : part.members()) assigned[m] = true;
    result.parts.push_back(std::move(part));
  }
  std::sort(result.parts.begin(), result.parts.end(),
            [](const PointSet& a, const PointSet& b) {
              return a.first() < b.first();
            });
  return result;
}

namespace detail {

inline void decompose(const SymMap& delta, const PointSet& subset, int parent,
                      std::vector<MDNode>& nodes) {
  int self = static_cast<int>(nodes.size());
  nodes.push_back({});
  nodes[self].members = subset;
  nodes[self].parent = parent;
  if (parent != -1) nodes[parent].children.push_back(self);
  if (subset.count() == 1) return;

  SymMap local = restrict(delta, subset);
  StrongPartition part = maximal_strong_partition(local);
  nodes[self].label.value = part.prime ? NodeLabel::kPrime : part.label;

  std::vector<int> members = subset.members();
  for (const PointSet& p : part.parts) {
    PointSet global(subset.universe_size());
    for (int local_idx : p.members()) global.insert(members[local_idx]);
    decompose(delta, global, self, nodes);
  }
}

}  // namespace detail

inline MDTree compute_mdt(const SymMap& delta) {
  std::vector<MDNode> nodes;
  detail::decompose(delta, delta.all_points(), -1, nodes);
  return MDTree(delta.point_names(), std::move(nodes));
}

inline std::vector<PointSet> strong_modules(const SymMap& delta) {
  auto sets = compute_mdt(delta).vertex_sets();
  std::sort(sets.begin(), sets.end());
  return sets;
}

// Tree from an arbitrary hierarchy; nodes unlabeled.  The family must
// contain X and all singletons and no two members may overlap.
inline MDTree tree_from_hierarchy(const std::vector<std::string>& point_names,
                                  std::vector<PointSet> family) {
  std::size_t n = point_names.size();
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  auto name_of = [&](const PointSet& s) {
    std::string out = "{";
    for (int m : s.members()) {
      if (out.size() > 1) out += ",";
      out += point_names[m];
    }
    return out + "}";
  };

  bool has_root = false;
  std::vector<bool> has_singleton(n, false);
  for (const auto& s : family) {
    if (s.count() == n) has_root = true;
    if (s.count() == 1) has_singleton[s.first()] = true;
  }
  if (!has_root) throw MapError("hierarchy lacks the full point set");
  for (std::size_t i = 0; i < n; ++i)
    if (!has_singleton[i])
      throw MapError("hierarchy lacks singleton {" + point_names[i] + "}");
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family[i].overlaps(family[j]))
        throw NotAHierarchy(name_of(family[i]), name_of(family[j]));

  // Parent = smallest proper superset.  Build top-down from the root.
  std::sort(family.begin(), family.end(),
            [](const PointSet& a, const PointSet& b) {
              if (a.count() != b.count()) return a.count() > b.count();
              return a < b;
            });
  std::vector<MDNode> nodes(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    nodes[i].members = family[i];
    for (std::size_t j = i; j-- > 0;) {
      if (family[i].is_subset_of(nodes[j].members) &&
          family[i].count() < nodes[j].members.count()) {
        // Candidates are scanned largest-first; keep the smallest superset.
        if (nodes[i].parent == -1 ||
            nodes[j].members.count() < nodes[nodes[i].parent].members.count())
          nodes[i].parent = static_cast<int>(j);
      }
    }
    if (nodes[i].parent != -1) nodes[nodes[i].parent].children.push_back(static_cast<int>(i));
  }
  for (auto& node : nodes)
    std::sort(node.children.begin(), node.children.end(),
              [&](int a, int b) {
                return nodes[a].members.first() < nodes[b].members.first();
              });
  return MDTree(point_names, std::move(nodes));
}

}  // namespace medex
