#include "forestbound/bounds.hpp"

#include <algorithm>
#include <string>

namespace forestbound {

RegionHitCounts::RegionHitCounts(const ForestFamily& family, const SelectionSet& selection)
    : prefix_(static_cast<std::size_t>(family.atom_count()) + 1, 0) {
  for (Hypothesis h : selection.members()) {
    if (h > family.hypothesis_count()) {
      throw IndexOutOfRange("selected hypothesis " + std::to_string(h) + " exceeds m = " +
                            std::to_string(family.hypothesis_count()));
    }
    ++prefix_[family.atom_of(h)];
  }
  for (std::size_t n = 1; n < prefix_.size(); ++n) prefix_[n] += prefix_[n - 1];
}

Count vstar(const ForestFamily& family, const SelectionSet& selection, VstarOptions options) {
  if (!family.is_complete()) {
    if (!options.auto_complete) {
      throw IncompleteFamilyError("vstar needs a complete family (every atom a region)");
    }
    return vstar(complete_family(family), selection);
  }
  const RegionHitCounts hits(family, selection);
  const int height = family.max_depth();
  const auto capped = [&](const Region& r) { return std::min(r.zeta, hits.region(r.key)); };

  // Vec/newVec indexed by the leftmost atom of each region; a region's
  // children at the next depth tile it, so their sum is a range sum.
  std::vector<Count> vec(static_cast<std::size_t>(family.atom_count()) + 1, 0);
  std::vector<Count> next(vec.size(), 0);
  for (Slot s : family.level(height)) {
    const Region& r = family.slot(s);
    vec[r.key.first] = capped(r);
  }
  for (int h = height - 1; h >= 1; --h) {
    std::fill(next.begin(), next.end(), 0);
    for (Slot s : family.level(h)) {
      const Region& r = family.slot(s);
      Count bound = capped(r);
      if (!r.key.is_atom()) {
        Count children = 0;
        for (AtomIndex n = r.key.first; n <= r.key.last; ++n) children += vec[n];
        bound = std::min(bound, children);
      }
      next[r.key.first] = bound;
    }
    std::swap(vec, next);
  }

  Count total = 0;
  for (Slot s : family.level(1)) total += vec[family.slot(s).key.first];
  return total;
}

BoundCurve naive_curve(const ForestFamily& family, const SelectionPath& path,
                       VstarOptions options) {
  if (path.hypothesis_count() != family.hypothesis_count()) {
    throw NotAPermutationError("path is over m = " + std::to_string(path.hypothesis_count()) +
                               " but the family has m = " +
                               std::to_string(family.hypothesis_count()));
  }
  if (!family.is_complete()) {
    if (!options.auto_complete) {
      throw IncompleteFamilyError("naive_curve needs a complete family");
    }
    return naive_curve(complete_family(family), path);
  }
  BoundCurve curve;
  curve.values.reserve(path.size() + 1);
  curve.values.push_back(0);
  const auto order = path.order();
  for (std::size_t t = 1; t <= order.size(); ++t) {
    SelectionSet prefix(std::vector<Hypothesis>(order.begin(), order.begin() + t));
    curve.values.push_back(vstar(family, prefix));
  }
  return curve;
}

}  // namespace forestbound
