#include "powsec/stats/ols.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numbers>

#include "powsec/error.hpp"

namespace powsec::stats {

double OlsFit::se(Eigen::Index i) const { return std::sqrt(covariance(i, i)); }

double OlsFit::t_stat(Eigen::Index i) const { return coefficients(i) / se(i); }

double OlsFit::p_value(Eigen::Index i) const {
  const double t = t_stat(i);
  if (!std::isfinite(t)) return std::isnan(t) ? t : 0.0;
  boost::math::students_t dist(static_cast<double>(df));
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

Eigen::Index OlsFit::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<Eigen::Index>(i);
  }
  throw DataError("fit has no coefficient '" + name + "'");
}

OlsFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X, std::vector<std::string> names) {
  const Eigen::Index n = X.rows();
  const Eigen::Index k = X.cols();
  if (y.size() != n) throw DataError("ols: response and design differ in length");
  if (static_cast<Eigen::Index>(names.size()) != k) throw DataError("ols: one name per column required");
  if (n <= k) {
    throw DataError("ols: insufficient observations (" + std::to_string(n) + " rows for " + std::to_string(k) +
                    " parameters)");
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
  if (qr.rank() < k) {
    std::string offenders;
    for (Eigen::Index j = qr.rank(); j < k; ++j) {
      if (!offenders.empty()) offenders += ", ";
      offenders += names[static_cast<std::size_t>(qr.colsPermutation().indices()(j))];
    }
    throw DataError("ols: design matrix is rank deficient; dependent column(s): " + offenders);
  }

  OlsFit fit;
  fit.names = std::move(names);
  fit.coefficients = qr.solve(y);
  fit.fitted = X * fit.coefficients;
  fit.residuals = y - fit.fitted;
  fit.n_obs = n;
  fit.df = n - k;
  fit.ssr = fit.residuals.squaredNorm();
  fit.sigma2 = fit.ssr / static_cast<double>(fit.df);

  // (X'X)^{-1} = P R^{-1} R^{-T} P'
  const Eigen::MatrixXd r = qr.matrixR().topLeftCorner(k, k).template triangularView<Eigen::Upper>();
  const Eigen::MatrixXd r_inv =
      r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
  const Eigen::MatrixXd xtx_inv_perm = r_inv * r_inv.transpose();
  const auto& perm = qr.colsPermutation();
  fit.covariance = fit.sigma2 * (perm * xtx_inv_perm * perm.transpose());

  const double nd = static_cast<double>(n);
  fit.loglik = -0.5 * nd * (std::log(2.0 * std::numbers::pi) + std::log(fit.ssr / nd) + 1.0);
  fit.aic = -2.0 * fit.loglik + 2.0 * static_cast<double>(k);
  fit.bic = -2.0 * fit.loglik + std::log(nd) * static_cast<double>(k);
  const double tss = (y.array() - y.mean()).square().sum();
  fit.r_squared = tss > 0 ? 1.0 - fit.ssr / tss : 0.0;
  fit.design = X;
  fit.response = y;
  fit.rows.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) fit.rows[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  return fit;
}

OlsFit ols(const Series& y, const Dataset& X, bool intercept) {
  validate(y);
  if (y.dates != X.index() && X.rows() > 0) throw DataError("ols: response is not on the regressors' index");
  const std::size_t n = y.size();
  std::vector<std::size_t> keep;
  for (std::size_t t = 0; t < n; ++t) {
    bool ok = !y.is_missing(t);
    for (const auto& c : X.columns()) ok = ok && !c.is_missing(t);
    if (ok) keep.push_back(t);
  }
  const auto k = static_cast<Eigen::Index>(X.columns().size() + (intercept ? 1 : 0));
  Eigen::MatrixXd design(static_cast<Eigen::Index>(keep.size()), k);
  Eigen::VectorXd response(static_cast<Eigen::Index>(keep.size()));
  std::vector<std::string> names;
  if (intercept) names.emplace_back("const");
  for (const auto& c : X.columns()) names.push_back(c.name);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    Eigen::Index col = 0;
    if (intercept) design(row, col++) = 1.0;
    for (const auto& c : X.columns()) design(row, col++) = c.values[keep[i]];
    response(row) = y.values[keep[i]];
  }
  OlsFit fit = ols(response, design, std::move(names));
  fit.rows = std::move(keep);
  return fit;
}

double wald_f(const OlsFit& fit, const Eigen::MatrixXd& R, const Eigen::VectorXd& r) {
  const Eigen::VectorXd diff = R * fit.coefficients - r;
  const Eigen::MatrixXd middle = R * fit.covariance * R.transpose();
  const Eigen::VectorXd solved = middle.ldlt().solve(diff);
  return diff.dot(solved) / static_cast<double>(R.rows());
}

}  // namespace powsec::stats
