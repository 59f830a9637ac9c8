#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "forestbound/sim.hpp"

namespace forestbound::sim {
namespace {

TEST(Normal, SurvivalFunction) {
  EXPECT_DOUBLE_EQ(normal_sf(0.0), 0.5);
  EXPECT_EQ(normal_sf(std::numeric_limits<double>::infinity()), 0.0);
  EXPECT_EQ(normal_sf(-std::numeric_limits<double>::infinity()), 1.0);
  EXPECT_NEAR(normal_sf(1.959963984540054), 0.025, 1e-15);
  EXPECT_NEAR(normal_sf(-1.0), 0.8413447460685429, 1e-15);
  // Far tail stays accurate instead of cancelling to zero.
  EXPECT_NEAR(normal_sf(10.0) / 7.619853024160527e-24, 1.0, 1e-12);
}

TEST(Normal, QuantileInvertsSurvival) {
  for (double p : {1e-300, 1e-12, 1e-4, 0.02425, 0.1, 0.3, 0.5, 0.7, 0.97575, 0.9999}) {
    const double x = normal_quantile(p);
    EXPECT_NEAR(1.0 - normal_sf(x), p, 1e-13 * std::max(1.0, p)) << p;
    EXPECT_NEAR(normal_sf(-x) / p, 1.0, 1e-12) << p;
  }
  EXPECT_DOUBLE_EQ(normal_quantile(0.5), 0.0);
  EXPECT_NEAR(normal_quantile(0.975), 1.959963984540054, 1e-13);
}

TEST(RngStream, UniformsAreOpenAndReproducible) {
  Rng a(7), b(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = a.uniform();
    EXPECT_GT(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_EQ(u, b.uniform());
  }
}

TEST(GenPvalues, NullMeanIsOneHalf) {
  ScenarioConfig cfg;
  cfg.m = 1 << 17;
  cfg.tree_height = 1;
  cfg.signal_leaves.clear();
  Rng rng(1);
  const auto p = gen_pvalues(cfg, rng);
  double sum = 0, below = 0;
  for (double x : p) {
    sum += x;
    below += x < 0.05 ? 1 : 0;
  }
  const double n = static_cast<double>(p.size());
  EXPECT_NEAR(sum / n, 0.5, 0.005);
  EXPECT_NEAR(below / n, 0.05, 0.003);
}

TEST(GenPvalues, SignalAtomsAreSmall) {
  ScenarioConfig cfg;  // m = 1024, height 10, atoms of 2
  Rng rng(2);
  const auto p = gen_pvalues(cfg, rng);
  ASSERT_EQ(p.size(), 1024u);
  // Leaves 1, 5, 9, 10 cover hypotheses 1-2, 9-10, 17-20.
  double signal = 0;
  for (std::size_t i : {0u, 1u, 8u, 9u, 16u, 17u, 18u, 19u}) signal += p[i];
  EXPECT_LT(signal / 8, 0.05);
}

TEST(ConfigValidation, RejectsBadScenarios) {
  ScenarioConfig cfg;
  cfg.m = 1000;
  EXPECT_THROW(cfg.validate(), InvalidConfigError);
  cfg = {};
  cfg.signal_leaves = {513};
  EXPECT_THROW(cfg.validate(), InvalidConfigError);
  cfg = {};
  cfg.n_repl = 0;
  EXPECT_THROW(cfg.validate(), InvalidConfigError);
  cfg = {};
  cfg.alpha = 1.0;
  EXPECT_THROW(cfg.validate(), InvalidConfigError);
  EXPECT_NO_THROW(ScenarioConfig{}.validate());
}

TEST(Summary, QuantilesInterpolate) {
  const TimingSummary s = summarize("x", {4, 1, 3, 2, 5});
  EXPECT_EQ(s.expr, "x");
  EXPECT_DOUBLE_EQ(s.min, 1);
  EXPECT_DOUBLE_EQ(s.lq, 2);
  EXPECT_DOUBLE_EQ(s.median, 3);
  EXPECT_DOUBLE_EQ(s.mean, 3);
  EXPECT_DOUBLE_EQ(s.uq, 4);
  EXPECT_DOUBLE_EQ(s.max, 5);
  EXPECT_EQ(s.neval, 5);

  const TimingSummary even = summarize("y", {1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(even.lq, 1.75);
  EXPECT_DOUBLE_EQ(even.median, 2.5);
  EXPECT_DOUBLE_EQ(even.uq, 3.25);
}

TEST(Scenario, TinyRunReportsAllVariants) {
  ScenarioConfig cfg;
  cfg.m = 2;
  cfg.tree_height = 1;
  cfg.signal_leaves = {1};
  cfg.n_repl = 1;
  const BenchReport r = run_scenario(cfg);
  ASSERT_EQ(r.rows.size(), 4u);
  for (const char* expr : {"naive.not.pruned", "naive.pruned", "fast.not.pruned", "fast.pruned"}) {
    const TimingSummary* row = r.find(expr);
    ASSERT_NE(row, nullptr) << expr;
    EXPECT_EQ(row->neval, 1);
    EXPECT_EQ(row->min, row->max);
    EXPECT_GE(row->min, 0.0);
  }
  EXPECT_TRUE(r.curves_identical);
  EXPECT_EQ(r.regions, 1u);
}

TEST(Scenario, DefaultShapeAndSkippedNaive) {
  ScenarioConfig cfg;
  cfg.n_repl = 3;
  cfg.naive_repl = 0;
  const BenchReport r = run_scenario(cfg);
  EXPECT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.find("naive.pruned"), nullptr);
  EXPECT_EQ(r.regions, 1023u);
  EXPECT_EQ(r.pruned_regions, 512u);
  EXPECT_EQ(r.vstar_full, 1024);
  EXPECT_TRUE(r.curves_identical);
  for (const TimingSummary& row : r.rows) {
    EXPECT_LE(row.min, row.lq);
    EXPECT_LE(row.lq, row.median);
    EXPECT_LE(row.median, row.uq);
    EXPECT_LE(row.uq, row.max);
    EXPECT_GE(row.mean, row.min);
    EXPECT_LE(row.mean, row.max);
  }

  const std::string csv = to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "expr,min,lq,mean,median,uq,max,neval");
  EXPECT_NE(to_table(r).find("fast.pruned"), std::string::npos);
}

TEST(Scenario, DkwmRunsAgree) {
  ScenarioConfig cfg;
  cfg.zeta_method = ZetaMethod::dkwm;
  cfg.path_order = PathOrder::pvalue;
  cfg.n_repl = 2;
  const BenchReport r = run_scenario(cfg);
  EXPECT_TRUE(r.curves_identical);
  EXPECT_LE(r.pruned_regions, r.regions);
  EXPECT_LE(r.vstar_full, 1024);
}

}  // namespace
}  // namespace forestbound::sim
