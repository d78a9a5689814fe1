#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "medexplain/point_set.hpp"
#include "medexplain/symmap.hpp"

namespace medex {

struct BudgetExceeded : MapError {
  explicit BudgetExceeded(const std::string& what) : MapError(what) {}
};

// Brute-force module list: every non-empty subset passing is_module.
inline std::vector<PointSet> enumerate_modules(
    const SymMap& delta, std::uint64_t subset_budget = 1ull << 20) {
  int n = delta.size();
  if (n >= 64 || (1ull << n) > subset_budget)
    throw BudgetExceeded("module enumeration over 2^" + std::to_string(n) +
                         " subsets exceeds budget");
  std::vector<PointSet> out;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    PointSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1ull << i)) s.insert(i);
    if (is_module(delta, s)) out.push_back(std::move(s));
  }
  return out;
}

// Members of the module family that overlap no other member.
inline std::vector<PointSet> enumerate_strong_modules(
    const SymMap& delta, std::uint64_t subset_budget = 1ull << 20) {
  std::vector<PointSet> modules = enumerate_modules(delta, subset_budget);
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < modules.size(); ++i) {
    bool strong = true;
    for (std::size_t j = 0; j < modules.size() && strong; ++j)
      if (i != j && modules[i].overlaps(modules[j])) strong = false;
    if (strong) out.push_back(modules[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct InstanceSpec {
  int points = 3;
  int alphabet = 2;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::uint64_t count = 100;          // random mode
  std::uint64_t budget = 1'000'000;   // max instances either mode
};

// Deterministic stream of symmetric maps.  Exhaustive mode walks every
// labeling once as a base-k counter over the pair slots; random mode draws
// each pair label i.i.d. uniform from a seeded generator.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(InstanceSpec spec)
      : spec_(spec), rng_(spec.seed), pick_(0, spec.alphabet - 1) {
    if (spec_.points < 2 || spec_.points > 1000)
      throw MapError("instance generator supports 2..1000 points");
    if (spec_.alphabet < 1) throw MapError("alphabet size must be positive");
    pairs_ = static_cast<std::size_t>(spec_.points) * (spec_.points - 1) / 2;
    if (spec_.exhaustive) {
      double total = 1;
      for (std::size_t i = 0; i < pairs_; ++i) {
        total *= spec_.alphabet;
        if (total > static_cast<double>(spec_.budget))
          throw BudgetExceeded("exhaustive sweep exceeds instance budget");
      }
    } else if (spec_.count > spec_.budget) {
      throw BudgetExceeded("random count exceeds instance budget");
    }
    counter_.assign(pairs_, 0);
    names_.clear();
    if (spec_.points <= 26) {
      for (int i = 0; i < spec_.points; ++i)
        names_.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      // zero-padded so lexicographic order matches index order
      std::size_t width = std::to_string(spec_.points - 1).size();
      for (int i = 0; i < spec_.points; ++i) {
        std::string num = std::to_string(i);
        names_.push_back("p" + std::string(width - num.size(), '0') + num);
      }
    }
    alphabet_ = std::make_shared<Alphabet>();
    for (int i = 0; i < spec_.alphabet; ++i)
      alphabet_->intern("c" + std::to_string(i));
  }

  std::optional<SymMap> next() {
    if (spec_.exhaustive) {
      if (done_) return std::nullopt;
      SymMap map(names_, alphabet_, counter_);
      // increment base-k counter
      std::size_t pos = 0;
      while (pos < pairs_ && ++counter_[pos] == spec_.alphabet)
        counter_[pos++] = 0;
      if (pos == pairs_) done_ = true;
      return map;
    }
    if (emitted_ >= spec_.count) return std::nullopt;
    ++emitted_;
    std::vector<int> labels(pairs_);
    for (auto& l : labels) l = pick_(rng_);
    return SymMap(names_, alphabet_, std::move(labels));
  }

 private:
  InstanceSpec spec_;
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> pick_;
  std::size_t pairs_ = 0;
  std::vector<int> counter_;
  std::vector<std::string> names_;
  std::shared_ptr<Alphabet> alphabet_;
  bool done_ = false;
  std::uint64_t emitted_ = 0;
};

}  // namespace medex
