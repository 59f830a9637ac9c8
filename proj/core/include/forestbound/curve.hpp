#pragma once

#include <optional>
#include <span>
#include <vector>

#include "forestbound/forest.hpp"
#include "forestbound/selection.hpp"

namespace forestbound {

// What happened when the t-th hypothesis joined the selection.
struct CurveStep {
  Hypothesis hypothesis = 0;
  // Already inside a saturated region; the bound did not move.
  bool blocked = false;
  // Depth at which a counter reached its zeta (0 when nothing saturated).
  int final_depth = 0;
  std::optional<RegionKey> saturated;
};

struct CurveOptions {
  // Track the partition realizing the bound and check, after every step, that
  // it tiles 1..m and reproduces V_t both as a partition sum and as the sum of
  // the root counters. Throws AuditError on any mismatch.
  bool audit = false;
  // Optional per-step record.
  std::vector<CurveStep>* trace = nullptr;
};

// Audit mode additionally checks every counter above the partition against
// an independent vstar evaluation when m is at most this.
inline constexpr Count kFullAuditMaxHypotheses = 64;

// V*(S_t) for every prefix S_t of the path in O(m |K|) total: per-region
// counters saturate at zeta, and a hypothesis inside a saturated region
// leaves the bound unchanged. Partial paths give the curve of their prefix.
BoundCurve fast_curve(const ForestFamily& family, const SelectionPath& path,
                      CurveOptions options = {});

// Hypotheses by increasing p-value; ties keep ascending label order.
// Throws InvalidProbabilityError for values outside [0, 1] or NaN.
SelectionPath path_from_pvalues(std::span<const double> p_values);

BoundCurve curve_from_pvalues(const ForestFamily& family, std::span<const double> p_values,
                              CurveOptions options = {});

// V_t / max(t, 1) as an exact fraction.
struct FdpBound {
  Count false_positives = 0;
  Count selected = 1;

  double value() const noexcept {
    return static_cast<double>(false_positives) / static_cast<double>(selected);
  }
  friend bool operator==(const FdpBound& a, const FdpBound& b) noexcept {
    return a.false_positives * b.selected == b.false_positives * a.selected;
  }
};

// FDP upper bounds for t = 1..T.
std::vector<FdpBound> fdp_curve(const BoundCurve& curve);

}  // namespace forestbound
