#include "forestbound/pruning.hpp"

#include <algorithm>

namespace forestbound {

PruneResult prune(const ForestFamily& family) {
  if (!family.is_complete()) throw IncompleteFamilyError("prune needs a complete family");

  const int height = family.max_depth();
  std::vector<Count> vec(static_cast<std::size_t>(family.atom_count()) + 1, 0);
  std::vector<Count> next(vec.size(), 0);
  std::vector<char> dead(family.slot_count(), 0);

  for (Slot s : family.level(height)) {
    const Region& r = family.slot(s);
    vec[r.key.first] = r.zeta;
  }
  for (int h = height - 1; h >= 1; --h) {
    std::fill(next.begin(), next.end(), 0);
    for (Slot s : family.level(h)) {
      const Region& r = family.slot(s);
      if (r.key.is_atom()) {
        next[r.key.first] = r.zeta;
        continue;
      }
      Count children = 0;
      for (AtomIndex n = r.key.first; n <= r.key.last; ++n) children += vec[n];
      if (r.zeta >= children) dead[s] = 1;
      next[r.key.first] = std::min(r.zeta, children);
    }
    std::swap(vec, next);
  }

  PruneResult result{family, {}, 0};
  for (Slot s : family.level(1)) result.vstar_full += vec[family.slot(s).key.first];
  for (Slot s = 0; s < family.slot_count(); ++s) {
    if (dead[s]) result.removed.push_back(family.slot(s).key);
  }
  std::sort(result.removed.begin(), result.removed.end(), [&](RegionKey a, RegionKey b) {
    const Region& ra = family.at(a);
    const Region& rb = family.at(b);
    if (ra.depth != rb.depth) return ra.depth < rb.depth;
    return a.first < b.first;
  });
  result.pruned_family = family.without(result.removed);
  return result;
}

ForestFamily compact(const PruneResult& result) { return result.pruned_family.compact(); }

}  // namespace forestbound
