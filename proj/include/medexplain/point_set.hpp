#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace medex {

// Subset of a fixed point universe [0, n).  Comparison is lexicographic on
// the member list, which gives all set enumerations a stable order.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : bits_(universe, false) {}

  static PointSet full(std::size_t universe) {
    PointSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.bits_[i] = true;
    s.count_ = universe;
    return s;
  }

  static PointSet singleton(std::size_t universe, int i) {
    PointSet s(universe);
    s.insert(i);
    return s;
  }

  static PointSet of(std::size_t universe, std::initializer_list<int> xs) {
    PointSet s(universe);
    for (int x : xs) s.insert(x);
    return s;
  }

  std::size_t universe_size() const { return bits_.size(); }
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int i) const {
    return i >= 0 && static_cast<std::size_t>(i) < bits_.size() && bits_[i];
  }

  void insert(int i) {
    check(i);
    if (!bits_[i]) {
      bits_[i] = true;
      ++count_;
    }
  }

  void erase(int i) {
    check(i);
    if (bits_[i]) {
      bits_[i] = false;
      --count_;
    }
  }

  int first() const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) return static_cast<int>(i);
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<int>(i));
    return out;
  }

  bool is_subset_of(const PointSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.bits_[i]) return false;
    return true;
  }

  bool intersects(const PointSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && other.bits_[i]) return true;
    return false;
  }

  // Overlap in the hierarchy sense: nonempty intersection, neither contained
  // in the other.
  bool overlaps(const PointSet& other) const {
    bool common = false, only_a = false, only_b = false;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && other.bits_[i]) common = true;
      else if (bits_[i]) only_a = true;
      else if (other.bits_[i]) only_b = true;
    }
    return common && only_a && only_b;
  }

  PointSet& unite(const PointSet& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (other.bits_[i] && !bits_[i]) {
        bits_[i] = true;
        ++count_;
      }
    }
    return *this;
  }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.bits_ == b.bits_;
  }

  friend bool operator<(const PointSet& a, const PointSet& b) {
    return a.members() < b.members();
  }

 private:
  void check(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= bits_.size())
      throw std::out_of_range("PointSet index " + std::to_string(i));
  }

  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

}  // namespace medex
