#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "forestbound/forest.hpp"
#include "forestbound/zeta.hpp"

namespace forestbound::sim {

// Reproducible stream: mt19937_64 bits, 53-bit uniforms, inverse-CDF normals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform on the open interval (0, 1).
  double uniform();
  double standard_normal();

 private:
  std::mt19937_64 engine_;
};

// Phi^{-1}(p) for p in (0, 1); |error| below 1e-13 after one Halley step.
double normal_quantile(double p);
// 1 - Phi(x), computed without cancellation; 0 at +inf, 1 at -inf.
double normal_sf(double x);

enum class PathOrder { identity, pvalue };

struct ScenarioConfig {
  Count m = 1024;
  int tree_height = 10;
  // Atoms carrying signal (mean mu); all other hypotheses are true nulls.
  std::vector<AtomIndex> signal_leaves{1, 5, 9, 10};
  double mu = 4.0;
  ZetaMethod zeta_method = ZetaMethod::trivial;
  double alpha = 0.05;
  int n_repl = 100;
  // Replications for the naive variants; defaults to n_repl. 0 skips them.
  std::optional<int> naive_repl;
  int warmup = 2;
  std::uint64_t seed = 20240501;
  PathOrder path_order = PathOrder::identity;

  // Throws InvalidConfigError.
  void validate() const;
  Count atom_size() const { return m >> (tree_height - 1); }
};

// p_i = 1 - Phi(X_i), X_i ~ N(mu_i, 1) independent.
std::vector<double> gen_pvalues(const ScenarioConfig& config, Rng& rng);

struct TimingSummary {
  std::string expr;
  double min = 0, lq = 0, mean = 0, median = 0, uq = 0, max = 0;
  int neval = 0;
};

// Quartiles use linear interpolation between order statistics.
TimingSummary summarize(std::string expr, std::vector<double> seconds);

struct BenchReport {
  ScenarioConfig config;
  // naive.not.pruned, naive.pruned, fast.not.pruned, fast.pruned (naive rows
  // are absent when skipped).
  std::vector<TimingSummary> rows;
  std::size_t regions = 0;
  std::size_t pruned_regions = 0;
  Count vstar_full = 0;
  // Every timed run of every variant returned the same curve.
  bool curves_identical = true;

  const TimingSummary* find(std::string_view expr) const;
};

BenchReport run_scenario(const ScenarioConfig& config);

struct ScalingReport {
  double fast_ratio = 0;         // fast.not.pruned, large / small medians
  double fast_pruned_ratio = 0;
  double naive_ratio = 0;        // naive.not.pruned, large / small medians
  double naive_pruned_ratio = 0;
  BenchReport small;
  BenchReport large;
};

// Requires large.m == 10 * small.m with equal tree heights.
ScalingReport scaling_check(const ScenarioConfig& small, const ScenarioConfig& large);

std::string to_csv(const BenchReport& report);
// Fixed-width table with columns expr, min, lq, mean, median, uq, max, neval.
std::string to_table(const BenchReport& report);

}  // namespace forestbound::sim
