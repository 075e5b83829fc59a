#include <gtest/gtest.h>

#include "powsec/error.hpp"
#include "powsec/sim/random.hpp"
#include "powsec/stats/synthetic.hpp"
#include "powsec/stats/unit_root.hpp"
#include "support.hpp"

using namespace powsec;
using namespace powsec::stats;

// Reference values: tests/oracles/compute_oracles.py on tests/fixtures/oracle_series.csv.

TEST(Adf, MatchesReferenceRandomWalkConstant) {
  const auto r = adf_test(test::oracle_column("rw"), 4, Deterministic::Constant);
  EXPECT_NEAR(r.statistic, -1.691381167297474, 1e-9);
  EXPECT_EQ(r.lags, 0);
  EXPECT_EQ(r.n_obs, 299u);
  ASSERT_TRUE(r.p_value.has_value());
  EXPECT_NEAR(*r.p_value, 0.43555854045453934, 1e-9);
  EXPECT_FALSE(r.rejects(0.05));
}

TEST(Adf, MatchesReferenceTrendAndNone) {
  const auto rw = test::oracle_column("rw");
  const auto ct = adf_test(rw, 4, Deterministic::Trend);
  EXPECT_NEAR(ct.statistic, -2.597698986628556, 1e-9);
  EXPECT_NEAR(*ct.p_value, 0.28095294962179, 1e-9);
  const auto nc = adf_test(rw, 4, Deterministic::None);
  EXPECT_NEAR(nc.statistic, 1.5009120207627422, 1e-9);
  EXPECT_NEAR(*nc.p_value, 0.9669717912408258, 1e-9);
}

TEST(Adf, MatchesReferenceStationaryAr) {
  const auto r = adf_test(test::oracle_column("ar"), 6, Deterministic::Constant);
  EXPECT_NEAR(r.statistic, -8.823828949559454, 1e-9);
  EXPECT_TRUE(r.rejects(0.01));
}

TEST(Adf, TooShortSeriesIsAnError) {
  std::vector<double> s(15, 1.0);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<double>(i % 3);
  EXPECT_THROW(adf_test(s, 0, Deterministic::Constant), DataError);
}

TEST(Adf, SimulatedCases) {
  sim::Rng rng(11);
  const auto rw = synthetic::random_walk(1000, rng);
  const auto wn = synthetic::white_noise(1000, rng);
  const auto ar = synthetic::ar1(1000, 0.5, rng);
  const int lags = default_max_lags(1000);
  EXPECT_FALSE(adf_test(rw, lags, Deterministic::Constant).rejects(0.05));
  EXPECT_TRUE(adf_test(wn, lags, Deterministic::Constant).rejects(0.01));
  EXPECT_TRUE(adf_test(ar, lags, Deterministic::Constant).rejects(0.05));
}

TEST(PhillipsPerron, MatchesReference) {
  const auto rw = pp_test(test::oracle_column("rw"), Deterministic::Constant);
  EXPECT_NEAR(rw.statistic, -1.6887608380077985, 1e-9);
  EXPECT_EQ(rw.lags, 5);
  EXPECT_NEAR(pp_test(test::oracle_column("ar"), Deterministic::Constant).statistic, -8.83900336804585, 1e-9);
  EXPECT_NEAR(pp_test(test::oracle_column("trend"), Deterministic::Trend).statistic, -18.10031053262657, 1e-9);
}

TEST(PhillipsPerron, AgreesWithAdfOnRandomWalk) {
  sim::Rng rng(12);
  const auto rw = synthetic::random_walk(1000, rng);
  EXPECT_EQ(pp_test(rw, Deterministic::Constant).rejects(0.05),
            adf_test(rw, default_max_lags(1000), Deterministic::Constant).rejects(0.05));
}

TEST(PhillipsPerron, SimulatedCases) {
  sim::Rng rng(13);
  EXPECT_FALSE(pp_test(synthetic::random_walk(1000, rng), Deterministic::Constant).rejects(0.05));
  EXPECT_TRUE(pp_test(synthetic::white_noise(1000, rng), Deterministic::Constant).rejects(0.01));
  EXPECT_TRUE(pp_test(synthetic::ar1(1000, 0.5, rng), Deterministic::Constant).rejects(0.05));
  EXPECT_TRUE(pp_test(synthetic::linear_trend(1000, 2.0, 0.05, rng), Deterministic::Trend).rejects(0.05));
}

TEST(DfGls, MatchesReference) {
  const auto c = dfgls_test(test::oracle_column("rw"), 4, Deterministic::Constant);
  EXPECT_NEAR(c.statistic, 1.2960903235128125, 1e-8);
  EXPECT_EQ(c.lags, 0);
  const auto t = dfgls_test(test::oracle_column("trend"), 4, Deterministic::Trend);
  EXPECT_NEAR(t.statistic, -4.79809686872969, 1e-8);
  EXPECT_EQ(t.lags, 3);
  EXPECT_EQ(t.n_obs, 296u);
  EXPECT_TRUE(t.rejects(0.05));
}

TEST(DfGls, SimulatedCases) {
  sim::Rng rng(14);
  const int lags = default_max_lags(1000);
  EXPECT_FALSE(dfgls_test(synthetic::random_walk(1000, rng), lags, Deterministic::Constant).rejects(0.05));
  EXPECT_TRUE(dfgls_test(synthetic::white_noise(1000, rng), lags, Deterministic::Constant).rejects(0.01));
  EXPECT_TRUE(dfgls_test(synthetic::ar1(1000, 0.5, rng), lags, Deterministic::Constant).rejects(0.05));
  EXPECT_TRUE(dfgls_test(synthetic::linear_trend(1000, 2.0, 0.05, rng), lags, Deterministic::Trend).rejects(0.05));
}

TEST(DfGls, RequiresDeterministicTerms) {
  EXPECT_THROW(dfgls_test(test::oracle_column("rw"), 4, Deterministic::None), InvalidParameter);
}

TEST(CriticalValues, MonotoneAcrossLevels) {
  for (auto det : {Deterministic::None, Deterministic::Constant, Deterministic::Trend}) {
    for (std::size_t n : {25u, 50u, 100u, 250u, 500u, 1000u, 100000u}) {
      const auto cv = dickey_fuller_critical_values(det, n);
      EXPECT_LT(cv.one, cv.five);
      EXPECT_LT(cv.five, cv.ten);
    }
  }
  for (std::size_t n : {50u, 100u, 200u, 500u, 5000u}) {
    const auto cv = dfgls_trend_critical_values(n);
    EXPECT_LT(cv.one, cv.five);
    EXPECT_LT(cv.five, cv.ten);
  }
}

TEST(CriticalValues, AsymptoticConstantCase) {
  const auto cv = dickey_fuller_critical_values(Deterministic::Constant, 1'000'000);
  EXPECT_NEAR(cv.one, -3.43, 0.005);
  EXPECT_NEAR(cv.five, -2.86, 0.005);
  EXPECT_NEAR(cv.ten, -2.57, 0.005);
}

TEST(CriticalValues, PValueMonotone) {
  double prev = 0;
  for (double tau = -6; tau <= 2; tau += 0.25) {
    const double p = dickey_fuller_p_value(tau, Deterministic::Constant);
    EXPECT_GE(p, prev);
    prev = p;
  }
}

TEST(CriticalValues, BoundsTableOrdered) {
  for (int k = 1; k <= 10; ++k) {
    for (double level : {0.01, 0.05, 0.10}) {
      const auto b = pesaran_bounds(k, level);
      ASSERT_TRUE(b.has_value());
      EXPECT_LT(b->lower, b->upper);
    }
    EXPECT_GT(pesaran_bounds(k, 0.01)->upper, pesaran_bounds(k, 0.05)->upper);
    EXPECT_GT(pesaran_bounds(k, 0.05)->upper, pesaran_bounds(k, 0.10)->upper);
  }
  EXPECT_FALSE(pesaran_bounds(11, 0.05).has_value());
  EXPECT_FALSE(pesaran_bounds(2, 0.025).has_value());
}
