#pragma once

#include <vector>

#include "forestbound/forest.hpp"

namespace forestbound {

struct PruneResult {
  // Surviving regions with recomputed depths. Removed regions stay behind as
  // dead slots until compact() is applied.
  ForestFamily pruned_family;
  // Removed keys in canonical (original depth, first) order.
  std::vector<RegionKey> removed;
  // V*({1..m}), produced by the same sweep.
  Count vstar_full = 0;
};

// Drops every region whose zeta is at least the best bound its children can
// achieve on the full set. Bounds are unchanged for every selection. The
// family must be complete; atoms are never removed.
PruneResult prune(const ForestFamily& family);

// Pruned family with dead slots dropped, so each depth level is contiguous.
ForestFamily compact(const PruneResult& result);

}  // namespace forestbound
