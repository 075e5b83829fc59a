#include <gtest/gtest.h>

#include <cmath>

#include "powsec/sim/random.hpp"
#include "powsec/stats/ardl.hpp"
#include "powsec/stats/diagnostics.hpp"
#include "support.hpp"

using namespace powsec;
using namespace powsec::stats;

namespace {

OlsFit reference_fit() {
  const auto d = make_ardl_data(test::oracle_dataset(), "y", {"x1", "x2"});
  return fit_ardl(d, ArdlOrder{2, {1, 0}}).ols;
}

// y = 1 + x + u with u drawn by `noise(t)`.
template <class Noise>
OlsFit regression(std::size_t n, std::uint64_t seed, Noise noise) {
  sim::Rng rng(seed);
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd y(n);
  for (std::size_t t = 0; t < n; ++t) {
    const auto i = static_cast<Eigen::Index>(t);
    X(i, 0) = 1;
    X(i, 1) = rng.normal();
    y(i) = 1 + X(i, 1) + noise(t, rng);
  }
  return ols(y, X, {"const", "x"});
}

}  // namespace

TEST(Diagnostics, SerialCorrelationMatchesReference) {
  const auto fit = reference_fit();
  EXPECT_NEAR(breusch_godfrey(fit, 1).statistic, 0.637350195697785, 1e-8);
  EXPECT_NEAR(breusch_godfrey(fit, 2).statistic, 0.6439702007317789, 1e-8);
  EXPECT_NEAR(durbin_alternative(fit, 1).statistic, 0.6237128538843526, 1e-8);
  EXPECT_NEAR(durbin_alternative(fit, 2).statistic, 0.6280395872191441, 1e-8);
  EXPECT_EQ(breusch_godfrey(fit, 2).df, 2);
}

TEST(Diagnostics, HeteroskedasticityAndNormalityMatchReference) {
  const auto fit = reference_fit();
  EXPECT_NEAR(breusch_pagan(fit).statistic, 2.6225319033250685, 1e-8);
  EXPECT_NEAR(jarque_bera(fit).statistic, 0.9108801447182333, 1e-8);
  EXPECT_EQ(jarque_bera(fit).df, 2);
}

TEST(Diagnostics, RecursiveResidualsMatchReference) {
  auto w = recursive_residuals(reference_fit());
  ASSERT_EQ(w.size(), 292u);
  // The reference divides by the sample standard deviation of the path.
  double mean = 0, ss = 0;
  for (double v : w) mean += v / static_cast<double>(w.size());
  for (double v : w) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(w.size() - 1));
  for (double& v : w) v /= sd;
  EXPECT_NEAR(w[0], -0.9318045390075058, 1e-8);
  EXPECT_NEAR(w[1], -0.45248621962930097, 1e-8);
  EXPECT_NEAR(w[2], 2.1885917980057306, 1e-8);
  EXPECT_NEAR(w.back(), 0.7625030089362879, 1e-8);
}

TEST(Diagnostics, RecursiveResidualSquaresSumToSsr) {
  const auto fit = reference_fit();
  double s = 0;
  for (double v : recursive_residuals(fit)) s += v * v;
  EXPECT_NEAR(s, fit.ssr, 1e-8 * fit.ssr);
}

TEST(Diagnostics, DetectsAutocorrelatedErrors) {
  double u = 0;
  const auto fit = regression(500, 4, [&](std::size_t, sim::Rng& rng) { return u = 0.6 * u + rng.normal(); });
  EXPECT_TRUE(breusch_godfrey(fit).rejects(0.01));
  EXPECT_TRUE(durbin_alternative(fit).rejects(0.01));
}

TEST(Diagnostics, DetectsVarianceBreak) {
  const auto fit =
      regression(600, 5, [](std::size_t t, sim::Rng& rng) { return (t < 300 ? 0.5 : 3.0) * rng.normal(); });
  EXPECT_FALSE(cusum_of_squares(fit).stable);
}

TEST(Diagnostics, DetectsMeanBreak) {
  const auto fit = regression(600, 6, [](std::size_t t, sim::Rng& rng) { return (t < 300 ? 0.0 : 2.0) + rng.normal(); });
  EXPECT_FALSE(cusum(fit).stable);
}

TEST(Diagnostics, CleanModelPasses) {
  const auto fit = regression(500, 7, [](std::size_t, sim::Rng& rng) { return rng.normal(); });
  const auto report = run_diagnostics(fit);
  EXPECT_FALSE(report.breusch_godfrey.rejects(0.01));
  EXPECT_FALSE(report.breusch_pagan.rejects(0.01));
  EXPECT_FALSE(report.jarque_bera.rejects(0.01));
  EXPECT_TRUE(report.stable());
  EXPECT_EQ(report.cusum.statistic.size(), 498u);
  EXPECT_EQ(report.cusum.lower.size(), report.cusum.statistic.size());
}

TEST(Diagnostics, SkewedErrorsFailNormality) {
  const auto fit = regression(500, 8, [](std::size_t, sim::Rng& rng) { return rng.exponential(1.0); });
  EXPECT_TRUE(jarque_bera(fit).rejects(0.01));
}

namespace {

// y = 1 + x + u, x = 4t/n + N(0, 1), so fitted values order time.
template <class Noise>
OlsFit trending_regression(std::size_t n, std::uint64_t seed, Noise noise) {
  sim::Rng rng(seed);
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd y(n);
  for (std::size_t t = 0; t < n; ++t) {
    const auto i = static_cast<Eigen::Index>(t);
    X(i, 0) = 1;
    X(i, 1) = 4.0 * static_cast<double>(t) / static_cast<double>(n) + rng.normal();
    y(i) = 1 + X(i, 1) + noise(t, rng);
  }
  return ols(y, X, {"const", "x"});
}

constexpr int kReps = 200;

}  // namespace

// Each test is sized at 5%; jointly four of them cannot stay under 10%.
TEST(DiagnosticsMonteCarlo, SizeOnWellSpecifiedModel) {
  int bg = 0, durbin = 0, bp = 0, jb = 0;
  for (int r = 0; r < kReps; ++r) {
    const auto d = run_diagnostics(trending_regression(1000, 3000 + r, [](std::size_t, sim::Rng& g) { return g.normal(); }), 1);
    bg += !d.breusch_godfrey.rejects(0.05);
    durbin += !d.durbin_alternative.rejects(0.05);
    bp += !d.breusch_pagan.rejects(0.05);
    jb += !d.jarque_bera.rejects(0.05);
  }
  EXPECT_GE(bg, 180);
  EXPECT_GE(durbin, 180);
  EXPECT_GE(bp, 180);
  EXPECT_GE(jb, 180);
}

TEST(DiagnosticsMonteCarlo, BreuschGodfreyPowerOnArErrors) {
  int hits = 0;
  for (int r = 0; r < kReps; ++r) {
    double e = 0;
    const auto fit = trending_regression(1000, 4000 + r, [&e](std::size_t, sim::Rng& g) { return e = 0.5 * e + g.normal(); });
    hits += breusch_godfrey(fit, 1).rejects(0.05);
  }
  EXPECT_GE(hits, 180);
}

// Plain CUSUM has essentially no power against a variance break; the
// squared-residual path is the one that crosses its bands.
TEST(DiagnosticsMonteCarlo, VarianceDoublingDetected) {
  int bp = 0, squares = 0;
  for (int r = 0; r < kReps; ++r) {
    const auto fit = trending_regression(1000, 5000 + r, [](std::size_t t, sim::Rng& g) {
      return (t < 500 ? 1.0 : std::sqrt(2.0)) * g.normal();
    });
    bp += breusch_pagan(fit).rejects(0.05);
    squares += !cusum_of_squares(fit).stable;
  }
  EXPECT_GE(bp, 180);
  EXPECT_GE(squares, 180);
}
