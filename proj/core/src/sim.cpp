#include "forestbound/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "forestbound/bounds.hpp"
#include "forestbound/curve.hpp"
#include "forestbound/pruning.hpp"

namespace forestbound::sim {

double Rng::uniform() {
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::standard_normal() { return normal_quantile(uniform()); }

double normal_sf(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -INFINITY;
    if (p == 1.0) return INFINITY;
    return NAN;
  }
  // Acklam's rational approximation, then one Halley step on erfc.
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  return x - u / (1.0 + 0.5 * x * u);
}

void ScenarioConfig::validate() const {
  if (tree_height < 1 || tree_height > 30) throw InvalidConfigError("tree height must be 1..30");
  const Count n_atoms = Count{1} << (tree_height - 1);
  if (m < 1 || m % n_atoms != 0) {
    throw InvalidConfigError("m = " + std::to_string(m) + " is not a positive multiple of " +
                             std::to_string(n_atoms) + " atoms");
  }
  for (AtomIndex leaf : signal_leaves) {
    if (leaf < 1 || leaf > n_atoms) {
      throw InvalidConfigError("signal leaf " + std::to_string(leaf) + " outside 1.." +
                               std::to_string(n_atoms));
    }
  }
  if (n_repl < 1) throw InvalidConfigError("n_repl must be at least 1");
  if (naive_repl && *naive_repl < 0) throw InvalidConfigError("naive replications must be >= 0");
  if (warmup < 0) throw InvalidConfigError("warm-up count must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidConfigError("alpha must lie in (0, 1)");
  if (!std::isfinite(mu)) throw InvalidConfigError("mu must be finite");
}

std::vector<double> gen_pvalues(const ScenarioConfig& config, Rng& rng) {
  config.validate();
  const Count atom_size = config.atom_size();
  const Count n_atoms = Count{1} << (config.tree_height - 1);
  std::vector<char> signal(static_cast<std::size_t>(n_atoms) + 1, 0);
  for (AtomIndex leaf : config.signal_leaves) signal[leaf] = 1;

  std::vector<double> p(static_cast<std::size_t>(config.m));
  for (Count i = 0; i < config.m; ++i) {
    const double mean = signal[i / atom_size + 1] ? config.mu : 0.0;
    p[static_cast<std::size_t>(i)] = normal_sf(mean + rng.standard_normal());
  }
  return p;
}

TimingSummary summarize(std::string expr, std::vector<double> seconds) {
  TimingSummary s;
  s.expr = std::move(expr);
  s.neval = static_cast<int>(seconds.size());
  if (seconds.empty()) return s;
  std::sort(seconds.begin(), seconds.end());
  const auto quantile = [&](double prob) {
    const double h = prob * static_cast<double>(seconds.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, seconds.size() - 1);
    return seconds[lo] + (h - static_cast<double>(lo)) * (seconds[hi] - seconds[lo]);
  };
  s.min = seconds.front();
  s.max = seconds.back();
  s.lq = quantile(0.25);
  s.median = quantile(0.5);
  s.uq = quantile(0.75);
  s.mean = std::accumulate(seconds.begin(), seconds.end(), 0.0) / static_cast<double>(seconds.size());
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

const TimingSummary* BenchReport::find(std::string_view expr) const {
  for (const TimingSummary& row : rows) {
    if (row.expr == expr) return &row;
  }
  return nullptr;
}

namespace {

// Times each call of `compute` separately; `check` sees every result
// outside the timed window.
template <typename Compute, typename Check>
std::vector<double> time_runs(int warmup, int runs, Compute&& compute, Check&& check) {
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < warmup; ++i) check(compute());
  std::vector<double> seconds;
  seconds.reserve(static_cast<std::size_t>(runs));
  for (int i = 0; i < runs; ++i) {
    const auto start = clock::now();
    auto result = compute();
    seconds.push_back(std::chrono::duration<double>(clock::now() - start).count());
    check(result);
  }
  return seconds;
}

}  // namespace

BenchReport run_scenario(const ScenarioConfig& config) {
  config.validate();
  BenchReport report;
  report.config = config;

  Rng rng(config.seed);
  const std::vector<double> p = gen_pvalues(config, rng);
  const ForestFamily family = estimate_zetas(build_dyadic(config.tree_height, config.atom_size()),
                                             {config.zeta_method, config.alpha}, p);
  const PruneResult pruned = prune(family);
  const ForestFamily pruned_family = compact(pruned);
  report.regions = family.size();
  report.pruned_regions = pruned_family.size();
  report.vstar_full = pruned.vstar_full;

  const SelectionPath path = config.path_order == PathOrder::identity
                                 ? SelectionPath::identity(config.m)
                                 : path_from_pvalues(p);
  const BoundCurve reference = fast_curve(family, path);

  const auto run = [&](std::string expr, int runs, auto&& compute) {
    auto seconds = time_runs(config.warmup, runs, compute, [&](const BoundCurve& curve) {
      if (curve != reference) report.curves_identical = false;
    });
    report.rows.push_back(summarize(std::move(expr), std::move(seconds)));
  };

  const int naive_runs = config.naive_repl.value_or(config.n_repl);
  if (naive_runs > 0) {
    run("naive.not.pruned", naive_runs, [&] { return naive_curve(family, path); });
    run("naive.pruned", naive_runs, [&] { return naive_curve(pruned_family, path); });
  }
  run("fast.not.pruned", config.n_repl, [&] { return fast_curve(family, path); });
  run("fast.pruned", config.n_repl, [&] { return fast_curve(pruned_family, path); });
  return report;
}

ScalingReport scaling_check(const ScenarioConfig& small, const ScenarioConfig& large) {
  if (large.m != 10 * small.m || large.tree_height != small.tree_height) {
    throw InvalidConfigError("scaling check needs large.m = 10 * small.m at equal tree height");
  }
  ScalingReport out;
  out.small = run_scenario(small);
  out.large = run_scenario(large);
  const auto ratio = [&](std::string_view expr) {
    const TimingSummary* a = out.small.find(expr);
    const TimingSummary* b = out.large.find(expr);
    if (a == nullptr || b == nullptr || a->median <= 0.0) return 0.0;
    return b->median / a->median;
  };
  out.fast_ratio = ratio("fast.not.pruned");
  out.fast_pruned_ratio = ratio("fast.pruned");
  out.naive_ratio = ratio("naive.not.pruned");
  out.naive_pruned_ratio = ratio("naive.pruned");
  return out;
}

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", v);
  return buf;
}

}  // namespace

std::string to_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "expr,min,lq,mean,median,uq,max,neval\n";
  for (const TimingSummary& r : report.rows) {
    out << r.expr << ',' << fixed(r.min) << ',' << fixed(r.lq) << ',' << fixed(r.mean) << ','
        << fixed(r.median) << ',' << fixed(r.uq) << ',' << fixed(r.max) << ',' << r.neval << '\n';
  }
  return out.str();
}

std::string to_table(const BenchReport& report) {
  std::vector<std::vector<std::string>> cells{{"expr", "min", "lq", "mean", "median", "uq", "max", "neval"}};
  for (const TimingSummary& r : report.rows) {
    cells.push_back({r.expr, fixed(r.min), fixed(r.lq), fixed(r.mean), fixed(r.median),
                     fixed(r.uq), fixed(r.max), std::to_string(r.neval)});
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      const std::string pad(width[c] - row[c].size(), ' ');
      out << (c == 0 ? row[c] + pad : pad + row[c]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace forestbound::sim
