#pragma once

#include <vector>

#include "forestbound/forest.hpp"
#include "forestbound/selection.hpp"

namespace forestbound {

struct VstarOptions {
  // Complete the family on the fly instead of throwing IncompleteFamilyError.
  bool auto_complete = false;
};

// Per-atom |S ∩ P_n| with prefix sums, so |S ∩ P_{i:j}| is O(1).
class RegionHitCounts {
 public:
  RegionHitCounts(const ForestFamily& family, const SelectionSet& selection);

  Count atom(AtomIndex n) const { return prefix_[n] - prefix_[n - 1]; }
  Count interval(AtomIndex first, AtomIndex last) const {
    return prefix_[last] - prefix_[first - 1];
  }
  Count region(RegionKey k) const { return interval(k.first, k.last); }

 private:
  std::vector<Count> prefix_;
};

// Upper confidence bound V*(S) on the number of true nulls in S, by the
// bottom-up depth sweep over a complete family. O(|S| + N * H).
Count vstar(const ForestFamily& family, const SelectionSet& selection, VstarOptions options = {});

// Curve by one independent vstar call per prefix of the path. Quadratic
// baseline for fast_curve.
BoundCurve naive_curve(const ForestFamily& family, const SelectionPath& path,
                       VstarOptions options = {});

}  // namespace forestbound
