#include "forestbound/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

namespace forestbound {
namespace {

void check_p_values(const ForestFamily& family, std::span<const double> p_values) {
  if (static_cast<Count>(p_values.size()) != family.hypothesis_count()) {
    throw InvalidProbabilityError("expected " + std::to_string(family.hypothesis_count()) +
                                  " p-values, got " + std::to_string(p_values.size()));
  }
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    if (!(p_values[i] >= 0.0 && p_values[i] <= 1.0)) {
      throw InvalidProbabilityError("p-value of hypothesis " + std::to_string(i + 1) +
                                    " is not in [0, 1]");
    }
  }
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidConfigError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

}  // namespace

std::string_view to_string(ZetaMethod method) noexcept {
  switch (method) {
    case ZetaMethod::trivial:
      return "trivial";
    case ZetaMethod::dkwm:
      return "dkwm";
  }
  return "unknown";
}

ZetaMethod parse_zeta_method(std::string_view name) {
  if (name == "trivial") return ZetaMethod::trivial;
  if (name == "dkwm") return ZetaMethod::dkwm;
  throw InvalidConfigError("unknown zeta method '" + std::string(name) + "'");
}

ForestFamily with_region_zetas(const ForestFamily& family, std::span<const double> p_values,
                               const RegionZetaFn& bound) {
  check_p_values(family, p_values);
  std::vector<RegionSpec> specs = family.specs();
  for (RegionSpec& spec : specs) {
    const HypothesisRange range = family.atom_span(spec.i, spec.j);
    const auto members = p_values.subspan(static_cast<std::size_t>(range.first - 1),
                                          static_cast<std::size_t>(range.size()));
    Count zeta = bound(members);
    if (zeta > range.size() || zeta < 0) {
      std::clog << "warning: zeta " << zeta << " for region (" << spec.i << "," << spec.j
                << ") clamped to [0, " << range.size() << "]\n";
      zeta = std::clamp<Count>(zeta, 0, range.size());
    }
    spec.zeta = zeta;
  }
  std::vector<Count> sizes(family.atom_sizes().begin(), family.atom_sizes().end());
  return ForestFamily::build(family.hypothesis_count(), std::move(sizes), specs);
}

ForestFamily zeta_trivial(const ForestFamily& family) {
  std::vector<RegionSpec> specs = family.specs();
  for (RegionSpec& spec : specs) spec.zeta = family.interval_size(spec.i, spec.j);
  std::vector<Count> sizes(family.atom_sizes().begin(), family.atom_sizes().end());
  return ForestFamily::build(family.hypothesis_count(), std::move(sizes), specs);
}

Count dkwm_region_bound(std::span<const double> region_p_values, double level) {
  check_alpha(level);
  const auto v = static_cast<Count>(region_p_values.size());
  if (v == 0) return 0;
  std::vector<double> sorted(region_p_values.begin(), region_p_values.end());
  std::sort(sorted.begin(), sorted.end());

  const double c = std::sqrt(0.5 * std::log(1.0 / level));
  const auto bound_at = [c](double t, Count above) {
    const double q = 1.0 - t;
    const double half = c / (2.0 * q);
    const double root = half + std::sqrt(half * half + static_cast<double>(above) / q);
    return root * root;
  };

  // #{p > t} is constant between consecutive p-values and the bound grows
  // with t there, so only t = 0 and t = p_(j) need checking.
  const auto above = [&](double t) {
    return static_cast<Count>(sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t));
  };
  double best = bound_at(0.0, above(0.0));
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    const double t = sorted[j];
    if (t >= 1.0) break;
    if (j > 0 && t == sorted[j - 1]) continue;
    best = std::min(best, bound_at(t, above(t)));
  }
  if (!(best < static_cast<double>(v))) return v;
  return static_cast<Count>(std::floor(best));
}

ForestFamily zeta_dkwm(const ForestFamily& family, std::span<const double> p_values,
                       double alpha) {
  check_alpha(alpha);
  const double level = alpha / static_cast<double>(std::max<std::size_t>(family.size(), 1));
  return with_region_zetas(family, p_values, [level](std::span<const double> region) {
    return dkwm_region_bound(region, level);
  });
}

ForestFamily estimate_zetas(const ForestFamily& family, const ZetaEstimator& estimator,
                            std::span<const double> p_values) {
  switch (estimator.method) {
    case ZetaMethod::trivial:
      return zeta_trivial(family);
    case ZetaMethod::dkwm:
      return zeta_dkwm(family, p_values, estimator.alpha);
  }
  throw InvalidConfigError("unknown zeta method");
}

}  // namespace forestbound
