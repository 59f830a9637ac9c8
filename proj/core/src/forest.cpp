#include "forestbound/forest.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace forestbound {
namespace {

std::string key_string(RegionKey k) {
  return "(" + std::to_string(k.first) + "," + std::to_string(k.last) + ")";
}

// Assigns depths to `regions` (any order) by a nesting sweep over intervals
// sorted by (first asc, last desc). Throws on duplicates and partial overlaps.
void assign_depths(std::vector<Region*>& regions) {
  std::sort(regions.begin(), regions.end(), [](const Region* a, const Region* b) {
    if (a->key.first != b->key.first) return a->key.first < b->key.first;
    return a->key.last > b->key.last;
  });
  std::vector<const Region*> open;
  for (std::size_t n = 0; n < regions.size(); ++n) {
    Region& r = *regions[n];
    if (n > 0 && regions[n - 1]->key == r.key) {
      throw DuplicateRegionError("region " + key_string(r.key) + " appears twice");
    }
    while (!open.empty() && open.back()->key.last < r.key.first) open.pop_back();
    if (!open.empty() && open.back()->key.last < r.key.last) {
      throw OverlapError("regions " + key_string(open.back()->key) + " and " +
                         key_string(r.key) + " partially overlap");
    }
    r.depth = static_cast<int>(open.size()) + 1;
    open.push_back(&r);
  }
}

bool canonical_less(const Region& a, const Region& b) {
  if (a.depth != b.depth) return a.depth < b.depth;
  return a.key.first < b.key.first;
}

}  // namespace

ForestFamily ForestFamily::build(Count m, std::vector<Count> atom_sizes,
                                 std::span<const RegionSpec> regions) {
  if (m < 1) throw SizeMismatchError("m must be at least 1");
  if (atom_sizes.empty()) throw SizeMismatchError("at least one atom is required");
  for (std::size_t n = 0; n < atom_sizes.size(); ++n) {
    if (atom_sizes[n] < 1) {
      throw SizeMismatchError("atom " + std::to_string(n + 1) + " has non-positive size");
    }
  }
  const Count total = std::accumulate(atom_sizes.begin(), atom_sizes.end(), Count{0});
  if (total != m) {
    throw SizeMismatchError("atom sizes sum to " + std::to_string(total) + ", expected m = " +
                            std::to_string(m));
  }

  ForestFamily f;
  f.m_ = m;
  f.atom_sizes_ = std::move(atom_sizes);
  const auto n_atoms = static_cast<AtomIndex>(f.atom_sizes_.size());
  f.atom_start_.assign(f.atom_sizes_.size() + 1, 0);
  std::partial_sum(f.atom_sizes_.begin(), f.atom_sizes_.end(), f.atom_start_.begin() + 1);
  f.atom_of_.resize(static_cast<std::size_t>(m));
  for (AtomIndex n = 1; n <= n_atoms; ++n) {
    std::fill(f.atom_of_.begin() + f.atom_start_[n - 1], f.atom_of_.begin() + f.atom_start_[n],
              n);
  }

  f.slots_.reserve(regions.size());
  for (const RegionSpec& spec : regions) {
    const RegionKey key{spec.i, spec.j};
    if (spec.i < 1 || spec.j < spec.i || spec.j > n_atoms) {
      throw IndexOutOfRange("region " + key_string(key) + " is not an interval of atoms 1.." +
                            std::to_string(n_atoms));
    }
    const Count size = f.interval_size(spec.i, spec.j);
    if (spec.zeta < 0 || spec.zeta > size) {
      throw ZetaRangeError("region " + key_string(key) + " has zeta " + std::to_string(spec.zeta) +
                           " outside [0, " + std::to_string(size) + "]");
    }
    f.slots_.push_back(Region{key, spec.zeta, 1});
  }

  std::vector<Region*> order;
  order.reserve(f.slots_.size());
  for (Region& r : f.slots_) order.push_back(&r);
  assign_depths(order);
  std::sort(f.slots_.begin(), f.slots_.end(), canonical_less);
  f.live_.assign(f.slots_.size(), 1);
  f.index_live();
  return f;
}

void ForestFamily::index_live() {
  live_count_ = 0;
  int depth = 0;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (live_[s]) {
      ++live_count_;
      depth = std::max(depth, slots_[s].depth);
    }
  }
  levels_.assign(static_cast<std::size_t>(depth), {});
  level_firsts_.assign(static_cast<std::size_t>(depth), {});
  by_key_.clear();
  by_key_.reserve(live_count_);
  AtomIndex atoms_present = 0;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (!live_[s]) continue;
    const Region& r = slots_[s];
    levels_[r.depth - 1].push_back(static_cast<Slot>(s));
    by_key_.emplace_back(r.key, static_cast<Slot>(s));
    if (r.key.is_atom()) ++atoms_present;
  }
  for (std::size_t h = 0; h < levels_.size(); ++h) {
    auto& lv = levels_[h];
    std::sort(lv.begin(), lv.end(),
              [this](Slot a, Slot b) { return slots_[a].key.first < slots_[b].key.first; });
    level_firsts_[h].reserve(lv.size());
    for (Slot s : lv) level_firsts_[h].push_back(slots_[s].key.first);
  }
  std::sort(by_key_.begin(), by_key_.end());
  complete_ = atoms_present == atom_count();
}

std::vector<Region> ForestFamily::regions() const {
  std::vector<Region> out;
  out.reserve(live_count_);
  for (std::size_t h = 1; h <= levels_.size(); ++h) {
    for (Slot s : level(static_cast<int>(h))) out.push_back(slots_[s]);
  }
  return out;
}

std::vector<RegionSpec> ForestFamily::specs() const {
  std::vector<RegionSpec> out;
  out.reserve(live_count_);
  for (const Region& r : regions()) out.push_back({r.key.first, r.key.last, r.zeta});
  return out;
}

const Region* ForestFamily::find(RegionKey key) const noexcept {
  auto it = std::lower_bound(by_key_.begin(), by_key_.end(), key,
                             [](const auto& entry, RegionKey k) { return entry.first < k; });
  if (it == by_key_.end() || it->first != key) return nullptr;
  return &slots_[it->second];
}

const Region& ForestFamily::at(RegionKey key) const {
  const Region* r = find(key);
  if (r == nullptr) throw UnknownRegionError("region " + key_string(key) + " is not in the family");
  return *r;
}

HypothesisRange ForestFamily::members(RegionKey key) const {
  at(key);
  return atom_span(key.first, key.last);
}

HypothesisRange ForestFamily::atom_span(AtomIndex first, AtomIndex last) const {
  if (first < 1 || last < first || last > atom_count()) {
    throw IndexOutOfRange("atom interval " + key_string({first, last}) + " out of range");
  }
  return {atom_start_[first - 1] + 1, atom_start_[last]};
}

AtomIndex ForestFamily::atom_of(Hypothesis h) const {
  if (h < 1 || h > m_) {
    throw IndexOutOfRange("hypothesis " + std::to_string(h) + " outside 1.." + std::to_string(m_));
  }
  return atom_of_[static_cast<std::size_t>(h - 1)];
}

ForestFamily ForestFamily::without(std::span<const RegionKey> removed) const {
  ForestFamily out = *this;
  for (RegionKey key : removed) {
    auto it = std::lower_bound(out.by_key_.begin(), out.by_key_.end(), key,
                               [](const auto& entry, RegionKey k) { return entry.first < k; });
    if (it == out.by_key_.end() || it->first != key || !out.live_[it->second]) {
      throw UnknownRegionError("cannot remove " + key_string(key) + ": not a live region");
    }
    out.live_[it->second] = 0;
  }
  std::vector<Region*> survivors;
  survivors.reserve(out.slots_.size());
  for (std::size_t s = 0; s < out.slots_.size(); ++s) {
    if (out.live_[s]) survivors.push_back(&out.slots_[s]);
  }
  assign_depths(survivors);
  out.index_live();
  return out;
}

ForestFamily ForestFamily::compact() const {
  ForestFamily out;
  out.m_ = m_;
  out.atom_sizes_ = atom_sizes_;
  out.atom_start_ = atom_start_;
  out.atom_of_ = atom_of_;
  out.slots_ = regions();
  out.live_.assign(out.slots_.size(), 1);
  out.index_live();
  return out;
}

ForestFamily complete_family(const ForestFamily& family) {
  std::vector<RegionSpec> specs = family.specs();
  for (AtomIndex n = 1; n <= family.atom_count(); ++n) {
    if (!family.contains({n, n})) specs.push_back({n, n, family.interval_size(n, n)});
  }
  std::vector<Count> sizes(family.atom_sizes().begin(), family.atom_sizes().end());
  return ForestFamily::build(family.hypothesis_count(), std::move(sizes), specs);
}

ForestFamily build_dyadic(int height, Count atom_size) {
  if (height < 1 || height > 30) throw InvalidConfigError("dyadic height must be in 1..30");
  if (atom_size < 1) throw InvalidConfigError("atom size must be at least 1");
  const AtomIndex n_atoms = AtomIndex{1} << (height - 1);
  std::vector<RegionSpec> specs;
  specs.reserve(2 * static_cast<std::size_t>(n_atoms) - 1);
  for (int h = 1; h <= height; ++h) {
    const AtomIndex width = n_atoms >> (h - 1);
    for (AtomIndex first = 1; first <= n_atoms; first += width) {
      specs.push_back({first, first + width - 1, width * atom_size});
    }
  }
  return ForestFamily::build(n_atoms * atom_size,
                             std::vector<Count>(static_cast<std::size_t>(n_atoms), atom_size),
                             specs);
}

}  // namespace forestbound
