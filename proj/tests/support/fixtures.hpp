#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "forestbound/forest.hpp"
#include "forestbound/selection.hpp"

namespace forestbound::testing {

// The 25-hypothesis worked example: eight atoms, nine given regions, and the
// three atoms (2,2), (6,6), (8,8) that completion adds.
inline std::vector<Count> example_atom_sizes() { return {2, 2, 6, 6, 4, 1, 1, 3}; }

inline std::vector<RegionSpec> example_given_regions() {
  return {{1, 5, 6}, {1, 1, 2}, {2, 3, 1}, {3, 3, 4}, {4, 5, 4},
          {4, 4, 2}, {5, 5, 3}, {6, 7, 2}, {7, 7, 0}};
}

inline ForestFamily example_incomplete() {
  return ForestFamily::build(25, example_atom_sizes(), example_given_regions());
}

inline ForestFamily example_complete() {
  auto specs = example_given_regions();
  specs.push_back({2, 2, 2});
  specs.push_back({6, 6, 1});
  specs.push_back({8, 8, 3});
  return ForestFamily::build(25, example_atom_sizes(), specs);
}

inline std::vector<Hypothesis> example_path_prefix() { return {11, 17, 12, 13, 18, 3, 19, 22, 5}; }

// Prefix followed by the remaining labels in increasing order.
inline SelectionPath example_full_path() {
  std::vector<Hypothesis> order = example_path_prefix();
  for (Hypothesis h = 1; h <= 25; ++h) {
    if (std::find(order.begin(), order.end(), h) == order.end()) order.push_back(h);
  }
  return SelectionPath(std::move(order), 25);
}

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Random composition of m into n positive parts.
inline std::vector<Count> random_atom_sizes(Rng& rng, AtomIndex n, Count m) {
  std::vector<Count> cuts;
  for (Count c = 1; c < m; ++c) cuts.push_back(c);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(static_cast<std::size_t>(n - 1));
  cuts.push_back(0);
  cuts.push_back(m);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Count> sizes;
  for (std::size_t k = 1; k < cuts.size(); ++k) sizes.push_back(cuts[k] - cuts[k - 1]);
  return sizes;
}

inline bool forest_compatible(const std::vector<RegionKey>& keys, RegionKey k) {
  return std::all_of(keys.begin(), keys.end(), [&](RegionKey o) {
    return o != k && (o.disjoint(k) || o.contains(k) || k.contains(o));
  });
}

struct FamilyShape {
  AtomIndex max_atoms = 6;
  Count max_m = 12;
  bool complete = true;
  // Probability that a candidate interval is kept (when compatible).
  double density = 0.5;
  // Probability of zeta = |R| rather than uniform on 0..|R|.
  double full_zeta = 0.2;
};

// Random valid family: random laminar interval set over random atoms.
inline ForestFamily random_family(Rng& rng, const FamilyShape& shape) {
  const auto n = static_cast<AtomIndex>(uniform_int(rng, 1, shape.max_atoms));
  const Count m = uniform_int(rng, n, std::max<Count>(n, shape.max_m));
  const std::vector<Count> sizes = random_atom_sizes(rng, n, m);

  std::vector<RegionKey> candidates;
  for (AtomIndex i = 1; i <= n; ++i) {
    for (AtomIndex j = i; j <= n; ++j) candidates.push_back({i, j});
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::bernoulli_distribution keep(shape.density);
  std::vector<RegionKey> keys;
  for (RegionKey k : candidates) {
    if (keep(rng) && forest_compatible(keys, k)) keys.push_back(k);
  }
  if (shape.complete) {
    for (AtomIndex a = 1; a <= n; ++a) {
      if (std::find(keys.begin(), keys.end(), RegionKey{a, a}) == keys.end()) keys.push_back({a, a});
    }
  }

  std::vector<Count> start{0};
  for (Count s : sizes) start.push_back(start.back() + s);
  std::bernoulli_distribution full(shape.full_zeta);
  std::vector<RegionSpec> specs;
  for (RegionKey k : keys) {
    const Count size = start[k.last] - start[k.first - 1];
    specs.push_back({k.first, k.last, full(rng) ? size : uniform_int(rng, 0, size)});
  }
  return ForestFamily::build(m, sizes, specs);
}

inline SelectionSet random_selection(Rng& rng, Count m) {
  const double q = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  std::bernoulli_distribution pick(q);
  std::vector<Hypothesis> members;
  for (Hypothesis h = 1; h <= m; ++h) {
    if (pick(rng)) members.push_back(h);
  }
  return SelectionSet(std::move(members));
}

inline SelectionSet subset_from_mask(Count m, std::uint64_t mask) {
  std::vector<Hypothesis> members;
  for (Hypothesis h = 1; h <= m; ++h) {
    if (mask >> (h - 1) & 1U) members.push_back(h);
  }
  return SelectionSet(std::move(members));
}

inline SelectionPath random_path(Rng& rng, Count m, bool allow_partial = false) {
  std::vector<Hypothesis> order(static_cast<std::size_t>(m));
  for (Hypothesis h = 1; h <= m; ++h) order[static_cast<std::size_t>(h - 1)] = h;
  std::shuffle(order.begin(), order.end(), rng);
  if (allow_partial) order.resize(static_cast<std::size_t>(uniform_int(rng, 0, m)));
  return SelectionPath(std::move(order), m);
}

// 1 + number of regions strictly containing `key`, straight from the
// definition of depth.
inline int brute_depth(const ForestFamily& family, RegionKey key) {
  int depth = 1;
  for (const Region& r : family.regions()) {
    if (r.key != key && r.key.contains(key)) ++depth;
  }
  return depth;
}

// Regions removable by the pruning definition: (i, i') goes when some chain
// i = i_0 < i_1 < ... < i_p = i' + 1, p >= 2, tiles it by family members
// whose zetas sum to at most zeta_(i,i'). Memoized cheapest tiling per
// sub-interval; shares no code with prune().
inline std::vector<RegionKey> definition_pruned(const ForestFamily& family) {
  std::map<RegionKey, Count> zeta;
  for (const Region& r : family.regions()) zeta[r.key] = r.zeta;
  std::map<RegionKey, std::optional<Count>> memo;

  // Cheapest tiling of atoms a..b by >= 1 members.
  auto cheapest = [&](auto&& self, AtomIndex a, AtomIndex b) -> std::optional<Count> {
    if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
    std::optional<Count> best;
    for (AtomIndex c = a; c <= b; ++c) {
      auto piece = zeta.find({a, c});
      if (piece == zeta.end()) continue;
      if (c == b) {
        best = best ? std::min(*best, piece->second) : piece->second;
        continue;
      }
      if (auto rest = self(self, c + 1, b)) {
        const Count total = piece->second + *rest;
        best = best ? std::min(*best, total) : total;
      }
    }
    memo[{a, b}] = best;
    return best;
  };

  std::vector<RegionKey> removed;
  for (const auto& [key, z] : zeta) {
    std::optional<Count> best;
    for (AtomIndex c = key.first; c < key.last; ++c) {
      auto piece = zeta.find({key.first, c});
      if (piece == zeta.end()) continue;
      if (auto rest = cheapest(cheapest, c + 1, key.last)) {
        const Count total = piece->second + *rest;
        best = best ? std::min(*best, total) : total;
      }
    }
    if (best && z >= *best) removed.push_back(key);
  }
  return removed;
}

}  // namespace forestbound::testing
