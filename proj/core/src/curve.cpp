#include "forestbound/curve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "forestbound/bounds.hpp"

namespace forestbound {
namespace {

// The depth-h region holding `atom`, if any.
std::optional<Slot> region_at_depth(const ForestFamily& family, int h, AtomIndex atom) {
  const auto firsts = family.level_firsts(h);
  auto it = std::upper_bound(firsts.begin(), firsts.end(), atom);
  if (it == firsts.begin()) return std::nullopt;
  const Slot s = family.level(h)[static_cast<std::size_t>(it - firsts.begin() - 1)];
  if (family.slot(s).key.last < atom) return std::nullopt;
  return s;
}

std::string key_string(RegionKey k) {
  return "(" + std::to_string(k.first) + "," + std::to_string(k.last) + ")";
}

// Bookkeeping for audit mode: the partition P^t and per-atom hit counts.
class CurveAuditor {
 public:
  CurveAuditor(const ForestFamily& family, const SelectionPath& path)
      : family_(family), path_(path), in_partition_(family.slot_count(), 0),
        atom_hits_(static_cast<std::size_t>(family.atom_count()) + 1, 0) {
    for (AtomIndex n = 1; n <= family.atom_count(); ++n) {
      in_partition_[slot_of({n, n})] = 1;
    }
  }

  void add(Hypothesis h) { ++atom_hits_[family_.atom_of(h)]; }

  // Replace every partition member inside `key` by `key` itself.
  void saturate(RegionKey key) {
    for (Slot s = 0; s < family_.slot_count(); ++s) {
      if (in_partition_[s] && key.contains(family_.slot(s).key)) in_partition_[s] = 0;
    }
    in_partition_[slot_of(key)] = 1;
  }

  void check(std::size_t t, Count v_t, std::span<const Count> eta) const {
    const std::string at = "audit failure at t = " + std::to_string(t) + ": ";

    std::vector<RegionKey> parts;
    for (Slot s = 0; s < family_.slot_count(); ++s) {
      if (in_partition_[s]) parts.push_back(family_.slot(s).key);
    }
    std::sort(parts.begin(), parts.end());
    AtomIndex expected = 1;
    for (RegionKey k : parts) {
      if (k.first != expected) throw AuditError(at + "partition does not tile the atoms");
      expected = k.last + 1;
    }
    if (expected != family_.atom_count() + 1) {
      throw AuditError(at + "partition does not cover every atom");
    }

    Count roots = 0;
    for (Slot s : family_.level(1)) roots += eta[s];
    if (roots != v_t) {
      throw AuditError(at + "root counters sum to " + std::to_string(roots) + ", V_t = " +
                       std::to_string(v_t));
    }
    if (partition_sum({1, family_.atom_count()}) != v_t) {
      throw AuditError(at + "partition sum differs from V_t = " + std::to_string(v_t));
    }

    if (family_.hypothesis_count() > kFullAuditMaxHypotheses) return;
    const auto prefix = path_.order().first(t);
    for (Slot s = 0; s < family_.slot_count(); ++s) {
      if (!family_.is_live(s)) continue;
      const RegionKey key = family_.slot(s).key;
      const bool above_partition = std::any_of(parts.begin(), parts.end(),
                                               [&](RegionKey p) { return key.contains(p); });
      if (!above_partition) continue;
      const HypothesisRange range = family_.atom_span(key.first, key.last);
      std::vector<Hypothesis> inside;
      for (Hypothesis h : prefix) {
        if (range.contains(h)) inside.push_back(h);
      }
      const Count local = vstar(family_, SelectionSet(std::move(inside)));
      if (local != eta[s]) {
        throw AuditError(at + "counter of " + key_string(key) + " is " + std::to_string(eta[s]) +
                         " but V*(S_t ∩ R) = " + std::to_string(local));
      }
      if (partition_sum(key) != local) {
        throw AuditError(at + "partition below " + key_string(key) + " does not realize V*");
      }
    }
  }

 private:
  Slot slot_of(RegionKey key) const {
    return static_cast<Slot>(&family_.at(key) - &family_.slot(0));
  }

  Count partition_sum(RegionKey within) const {
    Count total = 0;
    for (Slot s = 0; s < family_.slot_count(); ++s) {
      if (!in_partition_[s]) continue;
      const Region& r = family_.slot(s);
      if (!within.contains(r.key)) continue;
      Count hits = 0;
      for (AtomIndex n = r.key.first; n <= r.key.last; ++n) hits += atom_hits_[n];
      total += std::min(r.zeta, hits);
    }
    return total;
  }

  const ForestFamily& family_;
  const SelectionPath& path_;
  std::vector<char> in_partition_;
  std::vector<Count> atom_hits_;
};

}  // namespace

BoundCurve fast_curve(const ForestFamily& family, const SelectionPath& path,
                      CurveOptions options) {
  if (path.hypothesis_count() != family.hypothesis_count()) {
    throw NotAPermutationError("path is over m = " + std::to_string(path.hypothesis_count()) +
                               " but the family has m = " +
                               std::to_string(family.hypothesis_count()));
  }
  if (!family.is_complete()) throw IncompleteFamilyError("fast_curve needs a complete family");

  const int height = family.max_depth();
  std::vector<Count> eta(family.slot_count(), 0);
  // blocked[n]: atom n lies in a saturated region, so adding any of its
  // hypotheses leaves the bound unchanged.
  std::vector<char> blocked(static_cast<std::size_t>(family.atom_count()) + 1, 0);
  const auto mark_saturated = [&](const Region& r) {
    std::fill(blocked.begin() + r.key.first, blocked.begin() + r.key.last + 1, 1);
  };

  std::optional<CurveAuditor> auditor;
  if (options.audit) auditor.emplace(family, path);

  // Deepest first, so an enclosing zero-zeta region absorbs the inner ones in
  // the audited partition.
  for (int h = height; h >= 1; --h) {
    for (Slot s : family.level(h)) {
      const Region& r = family.slot(s);
      if (r.zeta == 0) {
        mark_saturated(r);
        if (auditor) auditor->saturate(r.key);
      }
    }
  }

  BoundCurve curve;
  curve.values.reserve(path.size() + 1);
  curve.values.push_back(0);
  Count v = 0;
  if (auditor) auditor->check(0, v, eta);

  for (std::size_t t = 1; t <= path.size(); ++t) {
    const Hypothesis hyp = path[t - 1];
    const AtomIndex atom = family.atom_of(hyp);
    CurveStep step{hyp, blocked[atom] != 0, 0, std::nullopt};
    if (!step.blocked) {
      for (int h = 1; h <= height; ++h) {
        const auto s = region_at_depth(family, h, atom);
        if (!s) break;
        const Region& r = family.slot(*s);
        if (++eta[*s] >= r.zeta) {
          mark_saturated(r);
          step.final_depth = h;
          step.saturated = r.key;
          if (auditor) auditor->saturate(r.key);
          break;
        }
      }
      ++v;
    }
    curve.values.push_back(v);
    if (auditor) {
      auditor->add(hyp);
      auditor->check(t, v, eta);
    }
    if (options.trace != nullptr) options.trace->push_back(step);
  }
  return curve;
}

SelectionPath path_from_pvalues(std::span<const double> p_values) {
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    const double p = p_values[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidProbabilityError("p-value of hypothesis " + std::to_string(i + 1) +
                                    " is not a probability");
    }
  }
  std::vector<Hypothesis> order(p_values.size());
  std::iota(order.begin(), order.end(), Hypothesis{1});
  std::stable_sort(order.begin(), order.end(), [&](Hypothesis a, Hypothesis b) {
    return p_values[static_cast<std::size_t>(a - 1)] < p_values[static_cast<std::size_t>(b - 1)];
  });
  return SelectionPath(std::move(order), static_cast<Count>(p_values.size()));
}

BoundCurve curve_from_pvalues(const ForestFamily& family, std::span<const double> p_values,
                              CurveOptions options) {
  if (static_cast<Count>(p_values.size()) != family.hypothesis_count()) {
    throw InvalidProbabilityError("expected " + std::to_string(family.hypothesis_count()) +
                                  " p-values, got " + std::to_string(p_values.size()));
  }
  return fast_curve(family, path_from_pvalues(p_values), options);
}

std::vector<FdpBound> fdp_curve(const BoundCurve& curve) {
  std::vector<FdpBound> out;
  out.reserve(curve.steps());
  for (std::size_t t = 1; t < curve.values.size(); ++t) {
    out.push_back({curve.values[t], static_cast<Count>(t)});
  }
  return out;
}

}  // namespace forestbound
