#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "medexplain/point_set.hpp"

namespace medex {

class MapError : public std::runtime_error {
 public:
  explicit MapError(const std::string& what) : std::runtime_error(what) {}
};

struct MissingPair : MapError {
  MissingPair(const std::string& x, const std::string& y)
      : MapError("missing pair {" + x + "," + y + "}") {}
};
struct ConflictingEntry : MapError {
  ConflictingEntry(const std::string& x, const std::string& y)
      : MapError("conflicting labels for pair {" + x + "," + y + "}") {}
};
struct DuplicatePoint : MapError {
  explicit DuplicatePoint(const std::string& x)
      : MapError("duplicate point '" + x + "'") {}
};
struct EmptySubset : MapError {
  EmptySubset() : MapError("restriction to the empty subset") {}
};
struct SamePoint : MapError {
  SamePoint() : MapError("pair of identical points") {}
};
struct NotAModule : MapError {
  NotAModule() : MapError("set is not a module") {}
};
struct NotAPartition : MapError {
  NotAPartition() : MapError("parts do not partition the point set") {}
};
struct PartNotAModule : MapError {
  PartNotAModule() : MapError("partition part is not a module") {}
};

// Interned label alphabet shared by a map and everything derived from it.
class Alphabet {
 public:
  int intern(const std::string& s) {
    auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(symbols_.size());
    symbols_.push_back(s);
    index_.emplace(s, id);
    return id;
  }

  std::optional<int> find(const std::string& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  const std::string& symbol(int id) const { return symbols_.at(id); }
  std::size_t size() const { return symbols_.size(); }
  const std::vector<std::string>& symbols() const { return symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::map<std::string, int> index_;
};

// A symmetric total map delta on unordered pairs of a finite point set.
// Storage is keyed by unordered pairs, so symmetry holds by construction.
// Immutable after construction.
class SymMap {
 public:
  SymMap(std::vector<std::string> point_names,
         std::shared_ptr<const Alphabet> alphabet, std::vector<int> pair_labels)
      : names_(std::move(point_names)),
        alphabet_(std::move(alphabet)),
        labels_(std::move(pair_labels)) {
    std::size_t n = names_.size();
    if (labels_.size() != n * (n - 1) / 2)
      throw MapError("pair label table has wrong size");
  }

  // Points are sorted by display name so all enumerations are deterministic.
  static SymMap build(
      std::vector<std::string> points,
      const std::vector<std::tuple<std::string, std::string, std::string>>&
          entries) {
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i)
      if (points[i] == points[i - 1]) throw DuplicatePoint(points[i]);

    std::map<std::string, int> index;
    for (std::size_t i = 0; i < points.size(); ++i)
      index[points[i]] = static_cast<int>(i);

    auto alphabet = std::make_shared<Alphabet>();
    std::size_t n = points.size();
    std::vector<int> labels(n * (n - 1) / 2, -1);
    for (const auto& [a, b, lab] : entries) {
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end()) throw MapError("unknown point '" + a + "'");
      if (ib == index.end()) throw MapError("unknown point '" + b + "'");
      if (ia->second == ib->second) throw SamePoint();
      int id = alphabet->intern(lab);
      int& slot = labels[pair_index(ia->second, ib->second)];
      if (slot != -1 && slot != id) throw ConflictingEntry(a, b);
      slot = id;
    }
    for (std::size_t y = 1; y < n; ++y)
      for (std::size_t x = 0; x < y; ++x)
        if (labels[pair_index(static_cast<int>(x), static_cast<int>(y))] == -1)
          throw MissingPair(points[x], points[y]);
    return SymMap(std::move(points), std::move(alphabet), std::move(labels));
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& point_name(int i) const { return names_.at(i); }
  const std::vector<std::string>& point_names() const { return names_; }
  const Alphabet& alphabet() const { return *alphabet_; }
  std::shared_ptr<const Alphabet> alphabet_ptr() const { return alphabet_; }

  std::optional<int> point_index(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<int>(it - names_.begin());
  }

  int label(int x, int y) const {
    if (x == y) throw SamePoint();
    return labels_[pair_index(x, y)];
  }

  const std::string& label_name(int x, int y) const {
    return alphabet_->symbol(label(x, y));
  }

  std::size_t pair_count() const { return labels_.size(); }

  // Distinct label ids actually used, ascending.
  std::vector<int> labels_present() const {
    std::vector<int> out(labels_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  PointSet all_points() const { return PointSet::full(names_.size()); }

 private:
  static std::size_t pair_index(int x, int y) {
    if (x > y) std::swap(x, y);
    return static_cast<std::size_t>(y) * (y - 1) / 2 + x;
  }

  std::vector<std::string> names_;
  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<int> labels_;
};

// delta restricted to the points in L.  The result shares the alphabet.
inline SymMap restrict(const SymMap& delta, const PointSet& subset) {
  if (subset.empty()) throw EmptySubset();
  std::vector<int> members = subset.members();
  std::vector<std::string> names;
  names.reserve(members.size());
  for (int m : members) names.push_back(delta.point_name(m));
  std::vector<int> labels;
  labels.reserve(members.size() * (members.size() - 1) / 2);
  for (std::size_t y = 1; y < members.size(); ++y)
    for (std::size_t x = 0; x < y; ++x)
      labels.push_back(delta.label(members[x], members[y]));
  return SymMap(std::move(names), delta.alphabet_ptr(), std::move(labels));
}

// Module test with a fixed reference element: O(|M| * |X \ M|).
inline bool is_module(const SymMap& delta, const PointSet& candidate) {
  if (candidate.count() <= 1) return true;  // trivial, including the empty set
  int ref = candidate.first();
  int n = delta.size();
  for (int z = 0; z < n; ++z) {
    if (candidate.contains(z)) continue;
    for (int x : candidate.members())
      if (x != ref && delta.label(x, z) != delta.label(ref, z)) return false;
  }
  return true;
}

// Smallest module containing {x, y}: closure under "z distinguishes two
// members of the current set".
inline PointSet minimal_module(const SymMap& delta, int x, int y) {
  if (x == y) throw SamePoint();
  int n = delta.size();
  PointSet set(n);
  set.insert(x);
  set.insert(y);
  // ref[z]: the one label z may see on the set; -2 marks z already inside.
  std::vector<int> ref(n, -1);
  std::vector<int> queue = {x, y};
  ref[x] = ref[y] = -2;
  while (!queue.empty()) {
    int w = queue.back();
    queue.pop_back();
    for (int z = 0; z < n; ++z) {
      if (ref[z] == -2) continue;
      int lab = delta.label(z, w);
      if (ref[z] == -1) {
        ref[z] = lab;
      } else if (ref[z] != lab) {
        set.insert(z);
        ref[z] = -2;
        queue.push_back(z);
      }
    }
  }
  return set;
}

inline bool is_strong_module(const SymMap& delta, const PointSet& candidate) {
  if (!is_module(delta, candidate)) throw NotAModule();
  std::size_t n = delta.size();
  if (candidate.count() <= 1 || candidate.count() == n) return true;
  // Any module overlapping M yields a pair x in M, y outside whose minimal
  // module overlaps M; conversely a strong M is contained in every such
  // minimal module.
  for (int x : candidate.members()) {
    for (std::size_t y = 0; y < n; ++y) {
      if (candidate.contains(static_cast<int>(y))) continue;
      PointSet mm = minimal_module(delta, x, static_cast<int>(y));
      if (!candidate.is_subset_of(mm)) return false;
    }
  }
  return true;
}

// Quotient over a module partition.  Part display names are "{a,b,...}".
inline SymMap quotient(const SymMap& delta, std::vector<PointSet> parts) {
  std::size_t n = delta.size();
  PointSet covered(n);
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.empty()) throw NotAPartition();
    if (covered.intersects(p)) throw NotAPartition();
    covered.unite(p);
    total += p.count();
    if (!is_module(delta, p)) throw PartNotAModule();
  }
  if (total != n) throw NotAPartition();

  std::sort(parts.begin(), parts.end());
  std::vector<std::string> part_names;
  for (const auto& p : parts) {
    std::string name = "{";
    for (int m : p.members()) {
      if (name.size() > 1) name += ",";
      name += delta.point_name(m);
    }
    name += "}";
    part_names.push_back(name);
  }
  // build() re-sorts by name; keep parts aligned with their names.
  std::vector<std::size_t> order(parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return part_names[a] < part_names[b];
  });

  std::vector<std::string> sorted_names;
  std::vector<int> labels;
  for (std::size_t j = 1; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const PointSet& a = parts[order[i]];
      const PointSet& b = parts[order[j]];
      labels.push_back(delta.label(a.first(), b.first()));
    }
  }
  for (std::size_t i : order) sorted_names.push_back(part_names[i]);
  return SymMap(std::move(sorted_names), delta.alphabet_ptr(),
                std::move(labels));
}

// Representative independence of the quotient label, per the unique-label
// lemma for disjoint modules.  Used by tests and verify paths.
inline bool quotient_well_defined(const SymMap& delta,
                                  const std::vector<PointSet>& parts) {
  for (std::size_t j = 1; j < parts.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      int expect = delta.label(parts[i].first(), parts[j].first());
      for (int x : parts[i].members())
        for (int y : parts[j].members())
          if (delta.label(x, y) != expect) return false;
    }
  }
  return true;
}

inline bool is_complete(const SymMap& delta) {
  if (delta.pair_count() <= 1) return true;
  return delta.labels_present().size() == 1;
}

// Only trivial modules.  Maps on fewer than 3 points are classified
// complete, never prime.
inline bool is_prime(const SymMap& delta) {
  int n = delta.size();
  if (n <= 2) return false;
  for (int y = 1; y < n; ++y)
    for (int x = 0; x < y; ++x)
      if (minimal_module(delta, x, y).count() != static_cast<std::size_t>(n))
        return false;
  return true;
}

struct UltrametricCheck {
  bool ok = true;
  std::string axiom;             // "U1" or "U2" on failure
  std::vector<int> witness;      // violating triple or quadruple
};

// (U2): every 3-subset carries at most 2 distinct labels.
// (U1): no 4-subset admits a role assignment (x,y,u,v) with
//       d(x,y)=d(y,u)=d(u,v) != d(y,v)=d(x,v)=d(x,u).
inline UltrametricCheck is_symbolic_ultrametric(const SymMap& delta) {
  int n = delta.size();
  for (int z = 2; z < n; ++z)
    for (int y = 1; y < z; ++y)
      for (int x = 0; x < y; ++x) {
        int a = delta.label(x, y), b = delta.label(x, z), c = delta.label(y, z);
        if (a != b && a != c && b != c) return {false, "U2", {x, y, z}};
      }

  std::vector<int> q(4);
  for (int d = 3; d < n; ++d)
    for (int c = 2; c < d; ++c)
      for (int b = 1; b < c; ++b)
        for (int a = 0; a < b; ++a) {
          q = {a, b, c, d};
          std::sort(q.begin(), q.end());
          do {
            int x = q[0], y = q[1], u = q[2], v = q[3];
            int p1 = delta.label(x, y), p2 = delta.label(y, u),
                p3 = delta.label(u, v);
            int s1 = delta.label(y, v), s2 = delta.label(x, v),
                s3 = delta.label(x, u);
            if (p1 == p2 && p2 == p3 && s1 == s2 && s2 == s3 && p1 != s1)
              return {false, "U1", {x, y, u, v}};
          } while (std::next_permutation(q.begin(), q.end()));
        }
  return {};
}

}  // namespace medex
