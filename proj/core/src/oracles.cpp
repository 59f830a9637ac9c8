#include "forestbound/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace forestbound::oracle {
namespace {

void check_members(const ForestFamily& family, const SelectionSet& selection) {
  for (Hypothesis h : selection.members()) {
    if (h > family.hypothesis_count()) {
      throw IndexOutOfRange("selected hypothesis " + std::to_string(h) + " exceeds m");
    }
  }
}

// |S ∩ R| by scanning S; deliberately not the prefix-count path used by vstar.
Count hits_in(const ForestFamily& family, const SelectionSet& selection, RegionKey key) {
  const HypothesisRange range = family.atom_span(key.first, key.last);
  return std::count_if(selection.members().begin(), selection.members().end(),
                       [&](Hypothesis h) { return range.contains(h); });
}

}  // namespace

Count vstar_sets(const ForestFamily& family, const SelectionSet& selection) {
  const Count m = family.hypothesis_count();
  if (m > kMaxSetsHypotheses) {
    throw TooLargeForOracleError("set oracle enumerates 2^m subsets; m = " + std::to_string(m) +
                                 " exceeds " + std::to_string(kMaxSetsHypotheses));
  }
  check_members(family, selection);
  using Mask = std::uint32_t;
  const auto bit = [](Hypothesis h) { return Mask{1} << (h - 1); };

  struct Constraint {
    Mask members;
    Count zeta;
  };
  std::vector<Constraint> constraints;
  for (const Region& r : family.regions()) {
    const HypothesisRange range = family.atom_span(r.key.first, r.key.last);
    Mask mask = 0;
    for (Hypothesis h = range.first; h <= range.last; ++h) mask |= bit(h);
    constraints.push_back({mask, r.zeta});
  }
  Mask s_mask = 0;
  for (Hypothesis h : selection.members()) s_mask |= bit(h);

  // The maximum is attained by some A ⊆ S; walk every submask of S.
  Count best = 0;
  for (Mask a = s_mask;; a = (a - 1) & s_mask) {
    const Count size = std::popcount(a);
    if (size > best) {
      const bool admissible = std::all_of(constraints.begin(), constraints.end(), [&](const auto& c) {
        return std::popcount(a & c.members) <= c.zeta;
      });
      if (admissible) best = size;
    }
    if (a == 0) break;
  }
  return best;
}

Count vstar_partitions(const ForestFamily& family, const SelectionSet& selection) {
  if (!family.is_complete()) {
    throw IncompleteFamilyError("partition oracle needs a complete family");
  }
  const AtomIndex n_atoms = family.atom_count();
  if (n_atoms > kMaxPartitionAtoms) {
    throw TooLargeForOracleError("partition oracle limited to N <= " +
                                 std::to_string(kMaxPartitionAtoms) + " atoms");
  }
  check_members(family, selection);

  // Regions grouped by their first atom; a partition is a left-to-right tiling.
  std::vector<std::vector<std::pair<AtomIndex, Count>>> starting_at(
      static_cast<std::size_t>(n_atoms) + 2);
  for (const Region& r : family.regions()) {
    starting_at[r.key.first].emplace_back(
        r.key.last, std::min(r.zeta, hits_in(family, selection, r.key)));
  }

  Count best = std::numeric_limits<Count>::max();
  auto tile = [&](auto&& self, AtomIndex next, Count cost) -> void {
    if (next > n_atoms) {
      best = std::min(best, cost);
      return;
    }
    for (const auto& [last, term] : starting_at[next]) self(self, last + 1, cost + term);
  };
  tile(tile, 1, 0);
  return best;
}

Count vstar_subsets(const ForestFamily& family, const SelectionSet& selection) {
  const std::vector<Region> regions = family.regions();
  if (regions.size() > kMaxSubsetRegions) {
    throw TooLargeForOracleError("subset oracle enumerates 2^|K|; |K| = " +
                                 std::to_string(regions.size()) + " exceeds " +
                                 std::to_string(kMaxSubsetRegions));
  }
  check_members(family, selection);

  std::vector<Count> capped;
  std::vector<HypothesisRange> ranges;
  for (const Region& r : regions) {
    capped.push_back(std::min(r.zeta, hits_in(family, selection, r.key)));
    ranges.push_back(family.atom_span(r.key.first, r.key.last));
  }

  Count best = static_cast<Count>(selection.size());
  const std::uint64_t n_subsets = std::uint64_t{1} << regions.size();
  for (std::uint64_t q = 1; q < n_subsets; ++q) {
    Count cost = 0;
    for (std::size_t k = 0; k < regions.size(); ++k) {
      if (q >> k & 1U) cost += capped[k];
    }
    for (Hypothesis h : selection.members()) {
      bool covered = false;
      for (std::size_t k = 0; k < regions.size() && !covered; ++k) {
        covered = (q >> k & 1U) && ranges[k].contains(h);
      }
      if (!covered) ++cost;
    }
    best = std::min(best, cost);
  }
  return best;
}

}  // namespace forestbound::oracle
