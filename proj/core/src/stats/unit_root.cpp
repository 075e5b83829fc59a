#include "powsec/stats/unit_root.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "powsec/error.hpp"
#include "powsec/stats/ols.hpp"

namespace powsec::stats {
namespace {

constexpr std::size_t kMinObservations = 20;

std::size_t det_columns(Deterministic det) {
  switch (det) {
    case Deterministic::None: return 0;
    case Deterministic::Constant: return 1;
    case Deterministic::Trend: return 2;
  }
  return 0;
}

struct DfRegression {
  OlsFit fit;
  Eigen::Index level_column = 0;
};

// Rows t in [first, n) whose ingredients are all finite, for `lags` augmentation lags.
std::vector<std::size_t> usable_rows(std::span<const double> s, std::size_t first, int lags) {
  std::vector<std::size_t> rows;
  for (std::size_t t = first; t < s.size(); ++t) {
    bool ok = true;
    for (int j = 0; j <= lags + 1 && ok; ++j) ok = std::isfinite(s[t - static_cast<std::size_t>(j)]);
    if (ok) rows.push_back(t);
  }
  return rows;
}

DfRegression df_regression(std::span<const double> s, const std::vector<std::size_t>& rows, int lags,
                           Deterministic det) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto dc = static_cast<Eigen::Index>(det_columns(det));
  const Eigen::Index k = dc + 1 + lags;
  Eigen::MatrixXd X(n, k);
  Eigen::VectorXd y(n);
  std::vector<std::string> names;
  if (dc >= 1) names.emplace_back("const");
  if (dc == 2) names.emplace_back("trend");
  names.emplace_back("L1.level");
  for (int j = 1; j <= lags; ++j) names.push_back("L" + std::to_string(j) + ".diff");
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::size_t t = rows[static_cast<std::size_t>(r)];
    y(r) = s[t] - s[t - 1];
    Eigen::Index c = 0;
    if (dc >= 1) X(r, c++) = 1.0;
    if (dc == 2) X(r, c++) = static_cast<double>(t + 1);
    X(r, c++) = s[t - 1];
    for (int j = 1; j <= lags; ++j) {
      const std::size_t u = t - static_cast<std::size_t>(j);
      X(r, c++) = s[u] - s[u - 1];
    }
  }
  DfRegression out{ols(y, X, std::move(names)), dc};
  return out;
}

enum class LagRule { Aic, ModifiedAic, Fixed };

// Ng-Perron (2001) modified AIC: ln(SSR/N) + 2 (tau + k) / N with
// tau = b^2 sum(y_{t-1}^2) / (SSR/N), b the lagged-level coefficient.
double modified_aic(const DfRegression& reg) {
  const OlsFit& fit = reg.fit;
  const auto n = static_cast<double>(fit.n_obs);
  const double sigma2 = fit.ssr / n;
  const double b = fit.coefficients(reg.level_column);
  const double tau = b * b * fit.design.col(reg.level_column).squaredNorm() / sigma2;
  const auto k = static_cast<double>(fit.n_params() - reg.level_column - 1);
  return std::log(sigma2) + 2.0 * (tau + k) / n;
}

// Lag count over 0..max_lags on the common sample, then refit.
DfRegression augmented_df(std::span<const double> s, int max_lags, Deterministic det, int& chosen,
                          LagRule rule = LagRule::Aic) {
  if (max_lags < 0) throw InvalidParameter("max_lags", "must be >= 0");
  const auto common = usable_rows(s, static_cast<std::size_t>(max_lags) + 1, max_lags);
  if (common.size() < kMinObservations) {
    throw DataError("unit-root test: fewer than 20 usable observations");
  }
  if (rule == LagRule::Fixed) {
    chosen = max_lags;
    const auto rows = usable_rows(s, static_cast<std::size_t>(chosen) + 1, chosen);
    if (rows.size() < kMinObservations) throw DataError("unit-root test: fewer than 20 usable observations");
    return df_regression(s, rows, chosen, det);
  }
  double best = std::numeric_limits<double>::infinity();
  chosen = 0;
  for (int lags = 0; lags <= max_lags; ++lags) {
    const auto reg = df_regression(s, common, lags, det);
    const double score = rule == LagRule::Aic ? reg.fit.aic : modified_aic(reg);
    if (score < best) {
      best = score;
      chosen = lags;
    }
  }
  const auto rows = usable_rows(s, static_cast<std::size_t>(chosen) + 1, chosen);
  return df_regression(s, rows, chosen, det);
}

}  // namespace

std::string UnitRootReport::conclusion() const {
  if (rejects(0.01)) return "reject unit root at 1%";
  if (rejects(0.05)) return "reject unit root at 5%";
  if (rejects(0.10)) return "reject unit root at 10%";
  return "fail to reject unit root";
}

int default_max_lags(std::size_t n) {
  return static_cast<int>(std::floor(12.0 * std::pow(static_cast<double>(n) / 100.0, 0.25)));
}

UnitRootReport adf_test(std::span<const double> s, int max_lags, Deterministic det) {
  UnitRootReport out;
  out.test = "ADF";
  out.det = det;
  const DfRegression reg = augmented_df(s, max_lags, det, out.lags);
  out.statistic = reg.fit.t_stat(reg.level_column);
  out.n_obs = static_cast<std::size_t>(reg.fit.n_obs);
  out.critical = dickey_fuller_critical_values(det, out.n_obs);
  out.p_value = dickey_fuller_p_value(out.statistic, det);
  return out;
}

UnitRootReport adf_test(const Series& s, int max_lags, Deterministic det) {
  const auto v = s.with_nan();
  return adf_test(std::span<const double>(v), max_lags, det);
}

UnitRootReport pp_test(std::span<const double> s, Deterministic det) {
  const auto rows = usable_rows(s, 1, 0);
  if (rows.size() < kMinObservations) throw DataError("unit-root test: fewer than 20 usable observations");
  const DfRegression reg = df_regression(s, rows, 0, det);
  const OlsFit& fit = reg.fit;
  const auto T = static_cast<double>(fit.n_obs);
  const Eigen::VectorXd& u = fit.residuals;
  const int bandwidth = static_cast<int>(std::floor(4.0 * std::pow(T / 100.0, 2.0 / 9.0)));

  const double gamma0 = u.squaredNorm() / T;
  double lrv = gamma0;
  for (int j = 1; j <= bandwidth; ++j) {
    const Eigen::Index n = u.size() - j;
    const double gamma_j = u.tail(n).dot(u.head(n)) / T;
    lrv += 2.0 * (1.0 - static_cast<double>(j) / (bandwidth + 1.0)) * gamma_j;
  }
  const double se = fit.se(reg.level_column);
  const double t = fit.coefficients(reg.level_column) / se;
  const double lambda = std::sqrt(lrv);

  UnitRootReport out;
  out.test = "PP";
  out.det = det;
  out.lags = bandwidth;
  out.statistic =
      std::sqrt(gamma0 / lrv) * t - 0.5 * ((lrv - gamma0) / lambda) * (T * se / std::sqrt(fit.sigma2));
  out.n_obs = static_cast<std::size_t>(fit.n_obs);
  out.critical = dickey_fuller_critical_values(det, out.n_obs);
  out.p_value = dickey_fuller_p_value(out.statistic, det);
  return out;
}

UnitRootReport pp_test(const Series& s, Deterministic det) {
  const auto v = s.with_nan();
  return pp_test(std::span<const double>(v), det);
}

UnitRootReport dfgls_test(std::span<const double> s, int max_lags, Deterministic det) {
  if (det == Deterministic::None) throw InvalidParameter("det", "DF-GLS requires const or trend");
  for (double v : s) {
    if (!std::isfinite(v)) throw DataError("DF-GLS: series has missing values");
  }
  const std::size_t n = s.size();
  if (n < kMinObservations + 1) throw DataError("unit-root test: fewer than 20 usable observations");
  const double cbar = det == Deterministic::Trend ? -13.5 : -7.0;
  const double a = 1.0 + cbar / static_cast<double>(n);
  const Eigen::Index dc = det == Deterministic::Trend ? 2 : 1;

  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd z(nn, dc);
  for (Eigen::Index t = 0; t < nn; ++t) {
    z(t, 0) = 1.0;
    if (dc == 2) z(t, 1) = static_cast<double>(t + 1);
  }
  Eigen::VectorXd yq(nn);
  Eigen::MatrixXd zq(nn, dc);
  yq(0) = s[0];
  zq.row(0) = z.row(0);
  for (Eigen::Index t = 1; t < nn; ++t) {
    yq(t) = s[static_cast<std::size_t>(t)] - a * s[static_cast<std::size_t>(t - 1)];
    zq.row(t) = z.row(t) - a * z.row(t - 1);
  }
  std::vector<std::string> names{"const"};
  if (dc == 2) names.emplace_back("trend");
  const Eigen::VectorXd gls = ols(yq, zq, names).coefficients;
  const Eigen::VectorXd level = Eigen::Map<const Eigen::VectorXd>(s.data(), nn);
  const Eigen::VectorXd ls = ols(level, z, names).coefficients;
  std::vector<double> detrended(n), ols_detrended(n);
  for (Eigen::Index t = 0; t < nn; ++t) {
    detrended[static_cast<std::size_t>(t)] = s[static_cast<std::size_t>(t)] - z.row(t).dot(gls);
    ols_detrended[static_cast<std::size_t>(t)] = s[static_cast<std::size_t>(t)] - z.row(t).dot(ls);
  }

  UnitRootReport out;
  out.test = "DF-GLS";
  out.det = det;
  // Perron-Qu (2007): choose the lag by MAIC on OLS-detrended data, then run
  // the GLS-detrended regression at that lag.
  augmented_df(ols_detrended, max_lags, Deterministic::None, out.lags, LagRule::ModifiedAic);
  const DfRegression reg = augmented_df(detrended, out.lags, Deterministic::None, out.lags, LagRule::Fixed);
  out.statistic = reg.fit.t_stat(reg.level_column);
  out.n_obs = static_cast<std::size_t>(reg.fit.n_obs);
  if (det == Deterministic::Trend) {
    out.critical = dfgls_trend_critical_values(out.n_obs);
  } else {
    out.critical = dickey_fuller_critical_values(Deterministic::None, out.n_obs);
    out.p_value = dickey_fuller_p_value(out.statistic, Deterministic::None);
  }
  return out;
}

UnitRootReport dfgls_test(const Series& s, int max_lags, Deterministic det) {
  const auto v = s.with_nan();
  return dfgls_test(std::span<const double>(v), max_lags, det);
}

}  // namespace powsec::stats
