#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "forestbound/errors.hpp"

namespace forestbound {

using Count = std::int64_t;
// 1-based index of an atom (leaf) in the left-to-right atom order.
using AtomIndex = std::int32_t;
// 1-based hypothesis label.
using Hypothesis = std::int64_t;
// Position of a region in a family's internal storage.
using Slot = std::uint32_t;

// A region is the union of the contiguous atoms first..last.
struct RegionKey {
  AtomIndex first = 1;
  AtomIndex last = 1;

  friend auto operator<=>(const RegionKey&, const RegionKey&) = default;

  bool contains(const RegionKey& other) const noexcept {
    return first <= other.first && other.last <= last;
  }
  bool disjoint(const RegionKey& other) const noexcept {
    return last < other.first || other.last < first;
  }
  bool is_atom() const noexcept { return first == last; }
};

// Input record for a region: atoms i..j and its bound on true nulls.
struct RegionSpec {
  AtomIndex i = 1;
  AtomIndex j = 1;
  Count zeta = 0;

  friend bool operator==(const RegionSpec&, const RegionSpec&) = default;
};

struct Region {
  RegionKey key;
  Count zeta = 0;
  // 1 + number of regions of the family strictly containing this one.
  int depth = 1;
};

// Closed range of hypothesis labels [first, last].
struct HypothesisRange {
  Hypothesis first = 1;
  Hypothesis last = 0;

  Count size() const noexcept { return last - first + 1; }
  bool contains(Hypothesis h) const noexcept { return first <= h && h <= last; }
  friend bool operator==(const HypothesisRange&, const HypothesisRange&) = default;
};

// Reference family whose regions are pairwise disjoint or nested, described
// over an ordered partition of 1..m into N contiguous atoms.
//
// Immutable once built. Regions live in slots ordered by (depth, first); a
// family produced by pruning keeps the removed regions as dead slots until
// compact() drops them. All queries see live regions only.
class ForestFamily {
 public:
  // Validates and builds. Throws SizeMismatchError, IndexOutOfRange,
  // ZetaRangeError, DuplicateRegionError or OverlapError.
  static ForestFamily build(Count m, std::vector<Count> atom_sizes,
                            std::span<const RegionSpec> regions);

  Count hypothesis_count() const noexcept { return m_; }
  AtomIndex atom_count() const noexcept {
    return static_cast<AtomIndex>(atom_sizes_.size());
  }
  std::span<const Count> atom_sizes() const noexcept { return atom_sizes_; }

  // Number of live regions, |K|.
  std::size_t size() const noexcept { return live_count_; }
  // Maximum depth H (0 for a family without regions).
  int max_depth() const noexcept { return static_cast<int>(levels_.size()); }
  bool is_complete() const noexcept { return complete_; }
  bool is_compact() const noexcept { return live_count_ == slots_.size(); }

  // Live regions in canonical (depth, first) order.
  std::vector<Region> regions() const;
  std::vector<RegionSpec> specs() const;

  const Region* find(RegionKey key) const noexcept;
  const Region& at(RegionKey key) const;
  bool contains(RegionKey key) const noexcept { return find(key) != nullptr; }
  int depth_of(RegionKey key) const { return at(key).depth; }
  HypothesisRange members(RegionKey key) const;

  // Hypotheses covered by atoms first..last (no membership check).
  HypothesisRange atom_span(AtomIndex first, AtomIndex last) const;
  Count interval_size(AtomIndex first, AtomIndex last) const {
    return atom_start_[last] - atom_start_[first - 1];
  }
  Count region_size(RegionKey key) const { return interval_size(key.first, key.last); }
  AtomIndex atom_of(Hypothesis h) const;

  // Depth index: slots of the live regions at depth h (1-based), sorted by
  // first atom, with a parallel array of first atoms for binary search.
  std::span<const Slot> level(int h) const { return levels_[h - 1]; }
  std::span<const AtomIndex> level_firsts(int h) const { return level_firsts_[h - 1]; }
  const Region& slot(Slot s) const { return slots_[s]; }
  bool is_live(Slot s) const { return live_[s] != 0; }
  std::size_t slot_count() const noexcept { return slots_.size(); }

  // Same storage with `removed` turned into dead slots and depths recomputed
  // over the survivors. Unknown keys throw UnknownRegionError.
  ForestFamily without(std::span<const RegionKey> removed) const;
  // Dense copy with dead slots dropped.
  ForestFamily compact() const;

 private:
  ForestFamily() = default;
  void index_live();

  Count m_ = 0;
  std::vector<Count> atom_sizes_;
  std::vector<Count> atom_start_;      // size N + 1, prefix sums of atom sizes
  std::vector<AtomIndex> atom_of_;     // size m, 1-based atom of hypothesis h at [h - 1]
  std::vector<Region> slots_;
  std::vector<char> live_;
  std::vector<std::vector<Slot>> levels_;
  std::vector<std::vector<AtomIndex>> level_firsts_;
  std::vector<std::pair<RegionKey, Slot>> by_key_;  // live only, sorted by key
  std::size_t live_count_ = 0;
  bool complete_ = false;
};

// Adds every missing atom (n, n) with zeta = |P_n|. Idempotent; existing
// regions keep their zeta. The result is always compact.
ForestFamily complete_family(const ForestFamily& family);

// Complete binary tree of the given height over 2^(height-1) atoms of equal
// size. Every zeta is the region's cardinality.
ForestFamily build_dyadic(int height, Count atom_size);

}  // namespace forestbound
