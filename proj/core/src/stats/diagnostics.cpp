#include "powsec/stats/diagnostics.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "powsec/error.hpp"

namespace powsec::stats {
namespace {

double chi2_sf(double x, int df) {
  if (!std::isfinite(x)) return 0.0;
  if (x <= 0) return 1.0;
  const boost::math::chi_squared dist(df);
  return boost::math::cdf(boost::math::complement(dist, x));
}

TestResult make(std::string name, double stat, int df) {
  return TestResult{std::move(name), stat, df, chi2_sf(stat, df)};
}

OlsFit auxiliary(const OlsFit& fit, int lags) {
  if (lags < 1) throw InvalidParameter("lags", "must be >= 1");
  const Eigen::Index n = fit.n_obs;
  const Eigen::Index k = fit.n_params();
  Eigen::MatrixXd X(n, k + lags);
  X.leftCols(k) = fit.design;
  std::vector<std::string> names = fit.names;
  for (int l = 1; l <= lags; ++l) {
    names.push_back("L" + std::to_string(l) + ".resid");
    for (Eigen::Index t = 0; t < n; ++t) X(t, k + l - 1) = t >= l ? fit.residuals(t - l) : 0.0;
  }
  return ols(fit.residuals, X, std::move(names));
}

}  // namespace

TestResult breusch_godfrey(const OlsFit& fit, int lags) {
  const OlsFit aux = auxiliary(fit, lags);
  // The residuals are orthogonal to X, so the centred and uncentred R^2 agree.
  return make("Breusch-Godfrey", static_cast<double>(aux.n_obs) * aux.r_squared, lags);
}

TestResult durbin_alternative(const OlsFit& fit, int lags) {
  const OlsFit aux = auxiliary(fit, lags);
  const Eigen::Index k = fit.n_params();
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(lags, aux.n_params());
  for (int l = 0; l < lags; ++l) R(l, k + l) = 1.0;
  const double f = wald_f(aux, R, Eigen::VectorXd::Zero(lags));
  return make("Durbin alternative", f * lags, lags);
}

TestResult breusch_pagan(const OlsFit& fit) {
  const Eigen::Index n = fit.n_obs;
  const double s2 = fit.ssr / static_cast<double>(n);
  Eigen::VectorXd z = fit.residuals.array().square() / s2;
  Eigen::MatrixXd X(n, 2);
  X.col(0).setOnes();
  X.col(1) = fit.fitted;
  const OlsFit aux = ols(z, X, {"const", "fitted"});
  const double ess = (aux.fitted.array() - z.mean()).square().sum();
  return make("Breusch-Pagan", ess / 2.0, 1);
}

TestResult jarque_bera(const OlsFit& fit) {
  const Eigen::VectorXd& u = fit.residuals;
  const auto n = static_cast<double>(u.size());
  const Eigen::ArrayXd c = u.array() - u.mean();
  const double m2 = c.square().sum() / n;
  const double m3 = c.cube().sum() / n;
  const double m4 = c.square().square().sum() / n;
  const double skew = m3 / std::pow(m2, 1.5);
  const double kurt = m4 / (m2 * m2);
  return make("Jarque-Bera", n / 6.0 * (skew * skew + (kurt - 3.0) * (kurt - 3.0) / 4.0), 2);
}

std::vector<double> recursive_residuals(const OlsFit& fit) {
  const Eigen::MatrixXd& X = fit.design;
  const Eigen::VectorXd& y = fit.response;
  const Eigen::Index n = X.rows();
  const Eigen::Index k = X.cols();

  // Smallest initial block with full column rank.
  Eigen::Index start = k;
  Eigen::MatrixXd P;
  Eigen::VectorXd b;
  for (; start < n; ++start) {
    const Eigen::MatrixXd Xs = X.topRows(start);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Xs);
    if (qr.rank() == k) {
      P = (Xs.transpose() * Xs).inverse();
      b = qr.solve(y.head(start));
      break;
    }
  }
  if (start >= n) throw DataError("recursive residuals: no full-rank initial block");

  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(n - start));
  for (Eigen::Index t = start; t < n; ++t) {
    const Eigen::VectorXd x = X.row(t).transpose();
    const Eigen::VectorXd Px = P * x;
    const double f = 1.0 + x.dot(Px);
    const double e = y(t) - x.dot(b);
    w.push_back(e / std::sqrt(f));
    const Eigen::VectorXd gain = Px / f;
    b += gain * e;
    P -= gain * Px.transpose();
  }
  return w;
}

StabilityPath cusum(const OlsFit& fit) {
  const auto w = recursive_residuals(fit);
  const auto m = static_cast<double>(w.size());
  double mean = 0;
  for (double v : w) mean += v;
  mean /= m;
  double var = 0;
  for (double v : w) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / (m - 1.0));

  StabilityPath out;
  out.name = "CUSUM";
  const double a = 0.948;  // 5% significance
  double sum = 0;
  for (std::size_t r = 0; r < w.size(); ++r) {
    sum += w[r];
    const double stat = sum / sd;
    const double band = a * (std::sqrt(m) + 2.0 * static_cast<double>(r + 1) / std::sqrt(m));
    out.statistic.push_back(stat);
    out.lower.push_back(-band);
    out.upper.push_back(band);
    if (std::abs(stat) > band) out.stable = false;
  }
  return out;
}

StabilityPath cusum_of_squares(const OlsFit& fit) {
  const auto w = recursive_residuals(fit);
  const auto m = static_cast<double>(w.size());
  double total = 0;
  for (double v : w) total += v * v;
  const double c0 = 1.3581 / std::sqrt(m / 2.0);

  StabilityPath out;
  out.name = "CUSUM of squares";
  double sum = 0;
  for (std::size_t r = 0; r < w.size(); ++r) {
    sum += w[r] * w[r];
    const double stat = sum / total;
    const double expected = static_cast<double>(r + 1) / m;
    out.statistic.push_back(stat);
    out.lower.push_back(expected - c0);
    out.upper.push_back(expected + c0);
    if (std::abs(stat - expected) > c0) out.stable = false;
  }
  return out;
}

DiagnosticsReport run_diagnostics(const OlsFit& fit, int lags) {
  DiagnosticsReport out;
  out.breusch_godfrey = breusch_godfrey(fit, lags);
  out.durbin_alternative = durbin_alternative(fit, lags);
  out.breusch_pagan = breusch_pagan(fit);
  out.jarque_bera = jarque_bera(fit);
  out.cusum = cusum(fit);
  out.cusum_of_squares = cusum_of_squares(fit);
  return out;
}

}  // namespace powsec::stats
