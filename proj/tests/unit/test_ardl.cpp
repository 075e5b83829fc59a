#include <gtest/gtest.h>

#include <cmath>

#include "powsec/error.hpp"
#include "powsec/stats/ardl.hpp"
#include "powsec/stats/synthetic.hpp"
#include "support.hpp"

using namespace powsec;
using namespace powsec::stats;

namespace {

ArdlData oracle_data() { return make_ardl_data(test::oracle_dataset(), "y", {"x1", "x2"}); }

// y_t = 0.5 + 0.8 y_{t-1} + 0.3 x_t exactly.
ArdlData exact_recursion(std::size_t n) {
  sim::Rng rng(5);
  ArdlData d;
  d.y_name = "y";
  d.x_names = {"x"};
  d.x.assign(1, std::vector<double>(n));
  d.y.resize(n);
  double y = 2.5;
  for (std::size_t t = 0; t < n; ++t) {
    const double x = rng.normal();
    y = 0.5 + 0.8 * y + 0.3 * x;
    d.x[0][t] = x;
    d.y[t] = y;
  }
  return d;
}

// Residual sum of squares of y on X.
double ssr(const Eigen::VectorXd& y, const Eigen::MatrixXd& X) {
  const Eigen::VectorXd b = X.colPivHouseholderQr().solve(y);
  return (y - X * b).squaredNorm();
}

}  // namespace

TEST(Ardl, LevelsFitMatchesReference) {
  const auto fit = fit_ardl(oracle_data(), ArdlOrder{2, {1, 0}});
  const double params[] = {0.3392363764851633, 0.5407428264746736, 0.04574712474512829,
                           0.5149959760555712, -0.19185321191967836, 0.28313893753922753};
  const double bse[] = {0.12185780514835406, 0.05489461692193592, 0.04493112381610708,
                        0.05994511261192854, 0.0672565386191272,  0.026606313256969192};
  ASSERT_EQ(fit.ols.n_params(), 6);
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(fit.ols.coefficients(i), params[i], 1e-10);
    EXPECT_NEAR(fit.ols.se(i), bse[i], 1e-10);
  }
  EXPECT_NEAR(fit.ols.aic, 860.6894990428226, 1e-8);
  EXPECT_EQ(fit.ols.names[1], "L1.y");
  EXPECT_EQ(fit.ols.names[4], "L1.x1");
  EXPECT_EQ(fit.ols.n_obs, 298);
}

TEST(Ardl, ExactRecursionRecovered) {
  const auto fit = fit_ardl(exact_recursion(200), ArdlOrder{1, {0}});
  EXPECT_NEAR(fit.ols.coefficients(0), 0.5, 1e-8);
  EXPECT_NEAR(fit.ols.coefficients(1), 0.8, 1e-8);
  EXPECT_NEAR(fit.ols.coefficients(2), 0.3, 1e-8);
}

TEST(Ardl, MonteCarloRecoveryWithinThreeSe) {
  sim::Rng rng(21);
  const auto fit = fit_ardl(synthetic::ardl_one_zero(1000, rng), ArdlOrder{1, {0}});
  const double truth[] = {0.5, 0.8, 0.3};
  for (int i = 0; i < 3; ++i) EXPECT_LT(std::abs(fit.ols.coefficients(i) - truth[i]), 3 * fit.ols.se(i));
}

TEST(Ardl, RefitOnFittedValuesIsIdempotent) {
  const auto fit = fit_ardl(oracle_data(), ArdlOrder{2, {1, 0}});
  const auto again = ols(fit.ols.fitted, fit.ols.design, fit.ols.names);
  EXPECT_LT((again.coefficients - fit.ols.coefficients).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Ardl, InvalidOrders) {
  const auto d = oracle_data();
  EXPECT_THROW(fit_ardl(d, ArdlOrder{0, {0, 0}}), InvalidParameter);
  EXPECT_THROW(fit_ardl(d, ArdlOrder{1, {0}}), InvalidParameter);
  EXPECT_THROW(fit_ardl(d, ArdlOrder{1, {-1, 0}}), InvalidParameter);
  EXPECT_THROW(select_ardl_order(d, 0, 0), InvalidParameter);
}

TEST(Ardl, GridInfeasibleForShortSample) {
  auto d = oracle_data();
  d.y.resize(20);
  for (auto& x : d.x) x.resize(20);
  EXPECT_THROW(select_ardl_order(d, 8, 4), DataError);
}

TEST(Ardl, MissingValuesDropRows) {
  auto d = oracle_data();
  d.y[100] = std::nan("");
  const auto fit = fit_ardl(d, ArdlOrder{1, {0, 0}});
  // Row 100 and row 101 (its lag) are gone.
  EXPECT_EQ(fit.ols.n_obs, 299 - 2);
}

TEST(OrderSelection, AgreesWithReferenceAndIsGlobalMinimum) {
  const auto sel = select_ardl_order(oracle_data(), 3, 2);
  EXPECT_EQ(sel.best, (ArdlOrder{1, {1, 0}}));
  EXPECT_EQ(sel.candidates.size(), 3u * 3u * 3u);
  for (const auto& c : sel.candidates) EXPECT_LE(sel.aic, c.aic);
}

TEST(OrderSelection, GridGuard) {
  EXPECT_THROW(select_ardl_order(oracle_data(), 8, 4, 10), InvalidParameter);
}

TEST(Bounds, FStatisticMatchesReferenceUecm) {
  const auto fit = fit_ardl(oracle_data(), ArdlOrder{2, {1, 1}});
  EXPECT_NEAR(bounds_f_statistic(fit), 33.76457513871245, 1e-8);
}

TEST(Bounds, FStatisticEqualsRestrictedVersusUnrestrictedUecm) {
  const auto d = oracle_data();
  const auto fit = fit_ardl(d, ArdlOrder{3, {2, 1}});
  // Unrestricted ECM: dy on const, y_{t-1}, x_{t-1}, dy lags 1..2, dx1 lags 0..1, dx2 lag 0.
  const auto& rows = fit.ols.rows;
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd U(n, 9);
  Eigen::VectorXd dy(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::size_t t = rows[static_cast<std::size_t>(r)];
    const auto& y = d.y;
    const auto& x1 = d.x[0];
    const auto& x2 = d.x[1];
    dy(r) = y[t] - y[t - 1];
    U.row(r) << 1.0, y[t - 1], x1[t - 1], x2[t - 1], y[t - 1] - y[t - 2], y[t - 2] - y[t - 3], x1[t] - x1[t - 1],
        x1[t - 1] - x1[t - 2], x2[t] - x2[t - 1];
  }
  Eigen::MatrixXd R(n, 6);
  R << U.col(0), U.rightCols(5);
  const double ssr_u = ssr(dy, U);
  const double ssr_r = ssr(dy, R);
  const double f = ((ssr_r - ssr_u) / 3.0) / (ssr_u / static_cast<double>(n - 9));
  EXPECT_NEAR(bounds_f_statistic(fit), f, 1e-8 * f);
}

TEST(Bounds, DecisionZones) {
  const BoundsCriticalValues cv{3.0, 4.0};
  EXPECT_EQ(bounds_decision(2.9, cv), BoundsDecision::NotCointegrated);
  EXPECT_EQ(bounds_decision(3.5, cv), BoundsDecision::Inconclusive);
  EXPECT_EQ(bounds_decision(4.1, cv), BoundsDecision::Cointegrated);
}

TEST(Bounds, MissingCriticalValuesIsAnError) {
  sim::Rng rng(3);
  const auto d = synthetic::independent_walks(300, rng, 11);
  ArdlOrder order{1, std::vector<int>(11, 0)};
  const auto fit = fit_ardl(d, order);
  EXPECT_THROW(bounds_test(fit, 0.05), DataError);
  const auto small = fit_ardl(oracle_data(), ArdlOrder{1, {0, 0}});
  EXPECT_THROW(bounds_test(small, 0.2), DataError);
}

TEST(Bounds, KnownDgps) {
  sim::Rng rng(31);
  const auto coint = fit_ardl(synthetic::cointegrated_pair(1000, rng), ArdlOrder{1, {1}});
  EXPECT_EQ(bounds_test(coint, 0.05).decision, BoundsDecision::Cointegrated);
  const auto walks = fit_ardl(synthetic::independent_walks(1000, rng), ArdlOrder{1, {1}});
  EXPECT_NE(bounds_test(walks, 0.05).decision, BoundsDecision::Cointegrated);
}

TEST(Ecm, HandComputedReparameterisation) {
  const auto fit = fit_ardl(exact_recursion(200), ArdlOrder{1, {0}});
  const auto ecm = to_ecm(fit);
  EXPECT_NEAR(ecm.alpha.estimate, -0.2, 1e-8);
  ASSERT_EQ(ecm.longrun.size(), 1u);
  EXPECT_NEAR(ecm.longrun[0].estimate, 1.5, 1e-7);
  ASSERT_TRUE(ecm.speed_days.has_value());
  EXPECT_NEAR(*ecm.speed_days, 5.0, 1e-6);
}

TEST(Ecm, MatchesReferenceUecm) {
  const auto fit = fit_ardl(oracle_data(), ArdlOrder{2, {1, 1}});
  const auto ecm = to_ecm(fit);
  EXPECT_NEAR(ecm.alpha.estimate, -0.42235723451597573, 1e-10);
  EXPECT_NEAR(ecm.longrun[0].estimate, 0.7812631645822437, 1e-10);
  EXPECT_NEAR(ecm.longrun[1].estimate, 0.6852778685600989, 1e-10);
  EXPECT_NEAR(ecm.intercept.estimate, 0.34594570238381234, 1e-10);
  ASSERT_EQ(ecm.shortrun.size(), 3u);
  EXPECT_EQ(ecm.shortrun[0].name, "L1.D.y");
  EXPECT_NEAR(ecm.shortrun[0].estimate, -0.044388587729277, 1e-10);
  EXPECT_NEAR(ecm.shortrun[1].estimate, 0.5136551392917076, 1e-10);
  EXPECT_NEAR(ecm.shortrun[2].estimate, 0.2629666829357598, 1e-10);
  EXPECT_NEAR(ecm.level_coefficients[0], 0.3299721496221548, 1e-10);
  EXPECT_NEAR(ecm.level_coefficients[1], 0.28943206544004524, 1e-10);
}

TEST(Ecm, AlphaStandardErrorIsSumOfLagVariances) {
  const auto fit = fit_ardl(oracle_data(), ArdlOrder{2, {1, 1}});
  const auto& V = fit.ols.covariance;
  const double var = V(1, 1) + V(2, 2) + 2 * V(1, 2);
  EXPECT_NEAR(to_ecm(fit).alpha.se, std::sqrt(var), 1e-14);
}

TEST(Ecm, SpeedOfAdjustment) {
  EXPECT_NEAR(*speed_of_adjustment_days(-0.009), 111.111, 1e-3);
  EXPECT_NEAR(*speed_of_adjustment_days(-0.002), 500.0, 1e-9);
  EXPECT_DOUBLE_EQ(*speed_of_adjustment_days(-1.0), 1.0);
  EXPECT_FALSE(speed_of_adjustment_days(0.0).has_value());
  EXPECT_FALSE(speed_of_adjustment_days(0.1).has_value());
}

TEST(Ecm, UnitRootBoundaryFlagged) {
  auto fit = fit_ardl(oracle_data(), ArdlOrder{2, {0, 0}});
  fit.ols.coefficients(1) = 0.7;
  fit.ols.coefficients(2) = 0.3;
  const auto ecm = to_ecm(fit);
  EXPECT_FALSE(ecm.longrun_defined);
  EXPECT_TRUE(std::isnan(ecm.longrun[0].estimate));
  EXPECT_FALSE(ecm.speed_days.has_value());
}

TEST(Ecm, RebuiltLevelsMatchFittedValues) {
  for (const auto& order : {ArdlOrder{1, {0, 0}}, ArdlOrder{2, {1, 0}}, ArdlOrder{3, {2, 4}}}) {
    const auto fit = fit_ardl(oracle_data(), order);
    const auto rebuilt = ecm_fitted_levels(to_ecm(fit), fit);
    EXPECT_LT((rebuilt - fit.ols.fitted).cwiseAbs().maxCoeff(), 1e-10) << order.to_string();
  }
}

TEST(DifferenceModel, Layout) {
  const auto fd = fit_difference_model(oracle_data(), ArdlOrder{2, {2, 0}});
  const std::vector<std::string> names{"const", "L1.D.y", "D.x1", "L1.D.x1", "D.x2"};
  EXPECT_EQ(fd.names, names);
  EXPECT_EQ(fd.n_obs, 300 - 2);
}
