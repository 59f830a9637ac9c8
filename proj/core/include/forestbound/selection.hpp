#pragma once

#include <span>
#include <vector>

#include "forestbound/forest.hpp"

namespace forestbound {

// A set of hypothesis labels, stored sorted and duplicate-free.
class SelectionSet {
 public:
  SelectionSet() = default;
  // Throws InvalidSelectionError on duplicates or labels below 1. The upper
  // bound m is checked by the algorithms that know it.
  explicit SelectionSet(std::vector<Hypothesis> members);

  static SelectionSet full(Count m);
  static SelectionSet range(HypothesisRange r);

  std::span<const Hypothesis> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Hypothesis h) const;

  friend bool operator==(const SelectionSet&, const SelectionSet&) = default;

 private:
  std::vector<Hypothesis> members_;
};

// An ordering (i_1, ..., i_T) of distinct hypotheses, T <= m. The nested
// selection sets are its prefixes. A full path (T = m) is a permutation.
class SelectionPath {
 public:
  // Throws NotAPermutationError on repeats or labels outside 1..m.
  SelectionPath(std::vector<Hypothesis> order, Count m);

  static SelectionPath identity(Count m);

  std::span<const Hypothesis> order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  Count hypothesis_count() const noexcept { return m_; }
  bool is_full() const noexcept { return static_cast<Count>(order_.size()) == m_; }
  Hypothesis operator[](std::size_t t) const { return order_[t]; }

 private:
  std::vector<Hypothesis> order_;
  Count m_ = 0;
};

// (V_0, V_1, ..., V_T) along a path, V_0 = 0.
struct BoundCurve {
  std::vector<Count> values;

  std::size_t steps() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  Count final_value() const { return values.back(); }
  friend bool operator==(const BoundCurve&, const BoundCurve&) = default;
};

}  // namespace forestbound
