#pragma once

#include "forestbound/forest.hpp"
#include "forestbound/selection.hpp"

// Brute-force evaluations of V*(S) straight from its defining formulas.
// Exponential; they exist to cross-check vstar and fast_curve on small
// instances and refuse anything larger with TooLargeForOracleError.
namespace forestbound::oracle {

inline constexpr Count kMaxSetsHypotheses = 20;
inline constexpr AtomIndex kMaxPartitionAtoms = 12;
inline constexpr std::size_t kMaxSubsetRegions = 20;

// max |S ∩ A| over A ⊆ {1..m} with |A ∩ R_k| <= zeta_k for every region.
// Works on incomplete families.
Count vstar_sets(const ForestFamily& family, const SelectionSet& selection);

// min over region sets Q tiling 1..m of sum_{k in Q} zeta_k ∧ |S ∩ R_k|.
// Complete families only.
Count vstar_partitions(const ForestFamily& family, const SelectionSet& selection);

// min over all Q ⊆ K of sum_{k in Q} zeta_k ∧ |S ∩ R_k| + |S \ ∪_{k in Q} R_k|.
Count vstar_subsets(const ForestFamily& family, const SelectionSet& selection);

}  // namespace forestbound::oracle
