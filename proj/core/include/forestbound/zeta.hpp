#pragma once

#include <functional>
#include <span>
#include <string_view>

#include "forestbound/forest.hpp"

namespace forestbound {

enum class ZetaMethod { trivial, dkwm };

std::string_view to_string(ZetaMethod method) noexcept;
// Accepts "trivial" and "dkwm"; throws InvalidConfigError otherwise.
ZetaMethod parse_zeta_method(std::string_view name);

struct ZetaEstimator {
  ZetaMethod method = ZetaMethod::trivial;
  // Joint level for the whole family; only dkwm uses it. Must lie in (0, 1).
  double alpha = 0.05;
};

// Bound on the number of true nulls among one region's p-values. Results
// above the region size are clamped (with a warning on std::clog).
using RegionZetaFn = std::function<Count(std::span<const double> region_p_values)>;

// New family with every region's zeta recomputed from its members' p-values.
ForestFamily with_region_zetas(const ForestFamily& family, std::span<const double> p_values,
                               const RegionZetaFn& bound);

// zeta_k = |R_k|.
ForestFamily zeta_trivial(const ForestFamily& family);

// DKWM upper confidence count at level `level` for one region:
//   floor(min_t (C / (2(1-t)) + sqrt(C^2 / (4(1-t)^2) + #{p > t} / (1-t)))^2)
// with C = sqrt(log(1/level) / 2) and t over {0} and the region's p-values
// below 1, capped at the region size.
Count dkwm_region_bound(std::span<const double> region_p_values, double level);

// DKWM zetas with a Bonferroni split of alpha over the |K| regions.
ForestFamily zeta_dkwm(const ForestFamily& family, std::span<const double> p_values, double alpha);

ForestFamily estimate_zetas(const ForestFamily& family, const ZetaEstimator& estimator,
                            std::span<const double> p_values);

}  // namespace forestbound
