#include <atomic>
#include <sstream>

#include <gtest/gtest.h>

#include "z4k/experiments.h"

namespace z4k {
namespace {

TEST(ParallelFor, VisitsEveryIndexOnce) {
  for (int workers : {1, 2, 5}) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), workers, [&](size_t i) { ++hits[i]; });
    for (const auto &h : hits) ASSERT_EQ(h.load(), 1);
  }
  parallel_for(0, 3, [](size_t) { FAIL(); });
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(10, 2,
                            [](size_t i) {
                              if (i == 7) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(Observables, ConjugatePartner) {
  EXPECT_EQ(conjugate_partner("X1"), "Z1");
  EXPECT_EQ(conjugate_partner("Z2"), "X2");
  EXPECT_EQ(conjugate_partner("XL"), "ZL");
  EXPECT_THROW(conjugate_partner("Y1"), std::invalid_argument);
}

ThresholdConfig small_threshold() {
  ThresholdConfig cfg;
  cfg.sizes = {4, 6};
  cfg.rates = {0.02, 0.08};
  cfg.trials = 60;
  cfg.seed = 5;
  return cfg;
}

TEST(Threshold, CsvSchema) {
  const std::string csv = threshold_csv(run_threshold(small_threshold()));
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "observable,L,p,trials,failures,p_logical,stderr");
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(lines, 4 * 2 * 2);  // four logicals, two sizes, two rates
}

TEST(Threshold, DeterministicAcrossWorkerCounts) {
  ThresholdConfig cfg = small_threshold();
  cfg.defects = true;
  cfg.sizes = {8};
  cfg.workers = 1;
  const std::string one = threshold_csv(run_threshold(cfg));
  cfg.workers = 3;
  EXPECT_EQ(threshold_csv(run_threshold(cfg)), one);
  cfg.seed = 6;
  EXPECT_NE(threshold_csv(run_threshold(cfg)), one);
}

TEST(Threshold, RowsAreConsistent) {
  ThresholdConfig cfg = small_threshold();
  cfg.rates = {0.0, 0.25};
  cfg.observables = {"X1", "Z1"};
  for (const auto &r : run_threshold(cfg)) {
    EXPECT_EQ(r.trials, cfg.trials);
    EXPECT_DOUBLE_EQ(r.p_logical, static_cast<double>(r.failures) / r.trials);
    EXPECT_NEAR(r.std_error, std::sqrt(r.p_logical * (1 - r.p_logical) / r.trials), 1e-12);
    if (r.p == 0.0) EXPECT_EQ(r.failures, 0);
    if (r.p == 0.25) EXPECT_GT(r.failures, 0);
  }
}

TEST(Threshold, RejectsUnknownObservable) {
  ThresholdConfig cfg = small_threshold();
  cfg.observables = {"ZL"};
  EXPECT_THROW(run_threshold(cfg), std::out_of_range);
}

TEST(Crossing, LinearInterpolation) {
  std::vector<ThresholdRow> rows = {
      {"X1", 8, 0.1, 100, 0, 0.10, 0.01}, {"X1", 8, 0.2, 100, 0, 0.30, 0.01},
      {"X1", 12, 0.1, 100, 0, 0.05, 0.01}, {"X1", 12, 0.2, 100, 0, 0.45, 0.01}};
  const Crossing c = estimate_crossing(rows, "X1", 8, 12);
  ASSERT_TRUE(c.found);
  // g goes from -0.05 to +0.15.
  EXPECT_NEAR(c.p, 0.125, 1e-12);
  EXPECT_GT(c.std_error, 0);
  EXPECT_FALSE(estimate_crossing(rows, "Z1", 8, 12).found);
  rows[3].p_logical = 0.2;
  EXPECT_FALSE(estimate_crossing(rows, "X1", 8, 12).found);
}

// A noisy sign change at low rate must not win over the real crossing.
TEST(Crossing, IgnoresLowRateFluctuation) {
  std::vector<ThresholdRow> rows;
  const double p[] = {0.02, 0.04, 0.06, 0.08, 0.10};
  const double lo[] = {0.002, 0.001, 0.05, 0.10, 0.20};
  const double hi[] = {0.001, 0.002, 0.02, 0.08, 0.30};
  for (int k = 0; k < 5; ++k) {
    auto row = [&](int L, double pl) {
      return ThresholdRow{"X1", L, p[k], 2000, 0, pl, std::sqrt(pl * (1 - pl) / 2000)};
    };
    rows.push_back(row(8, lo[k]));
    rows.push_back(row(12, hi[k]));
  }
  const Crossing c = estimate_crossing(rows, "X1", 8, 12);
  ASSERT_TRUE(c.found);
  EXPECT_GT(c.p, 0.08);
  EXPECT_LT(c.p, 0.10);
}

LifetimeConfig small_lifetime() {
  LifetimeConfig cfg;
  cfg.sizes = {4};
  cfg.lambdas = {1.0, 2.0};
  cfg.trials = 40;
  cfg.seed = 3;
  return cfg;
}

TEST(Lifetime, CsvAndDeterminism) {
  LifetimeConfig cfg = small_lifetime();
  const std::string one = lifetime_csv(run_lifetime(cfg));
  EXPECT_EQ(one.substr(0, one.find('\n')), "lambda,L,trials,mean_lifetime,stderr");
  cfg.workers = 4;
  EXPECT_EQ(lifetime_csv(run_lifetime(cfg)), one);
}

TEST(Lifetime, CapCensorsTrials) {
  LifetimeConfig cfg = small_lifetime();
  cfg.lambdas = {5.0};
  cfg.max_time = 1e-3;
  for (const auto &r : run_lifetime(cfg)) {
    EXPECT_EQ(r.censored, r.trials);
    EXPECT_LE(r.mean_lifetime, 1e-3 + 1.0 / (6 * 16));
  }
}

TEST(Lifetime, TrialProperties) {
  const KagomeCode code = KagomeCode::build(4);
  const Decoder dec(code);
  const ThermalParams params = ThermalParams::from_lambda(1.0);
  const LifetimeSample a = lifetime_trial(dec, params, 99, 1, 1e4);
  const LifetimeSample b = lifetime_trial(dec, params, 99, 1, 1e4);
  EXPECT_EQ(a.time, b.time);
  EXPECT_FALSE(a.censored);
  EXPECT_GT(a.time, 0);
  // A coarser decoding stride can only notice the failure later.
  double strided = 0, dense = 0;
  for (uint64_t s = 0; s < 30; ++s) {
    dense += lifetime_trial(dec, params, s, 1, 1e4).time;
    strided += lifetime_trial(dec, params, s, 8, 1e4).time;
  }
  EXPECT_GE(strided, dense);
}

TEST(Lifetime, RejectsBadConfig) {
  LifetimeConfig cfg = small_lifetime();
  cfg.lambdas = {0.0};
  EXPECT_THROW(run_lifetime(cfg), std::invalid_argument);
  cfg = small_lifetime();
  cfg.trials = 0;
  EXPECT_THROW(run_lifetime(cfg), std::invalid_argument);
}

// Colder baths give longer lifetimes at fixed size.
TEST(Lifetime, IncreasesWithLambdaAtSmallSize) {
  LifetimeConfig cfg = small_lifetime();
  cfg.lambdas = {0.5, 1.5};
  cfg.trials = 200;
  const auto rows = run_lifetime(cfg);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_GT(rows[1].mean_lifetime, rows[0].mean_lifetime + 2 * (rows[0].std_error + rows[1].std_error));
}

}  // namespace
}  // namespace z4k
