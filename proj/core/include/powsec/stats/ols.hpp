#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "powsec/stats/series.hpp"

namespace powsec::stats {

struct OlsFit {
  std::vector<std::string> names;
  Eigen::VectorXd coefficients;
  Eigen::MatrixXd covariance;  // sigma2 (X'X)^{-1}
  Eigen::VectorXd residuals;
  Eigen::VectorXd fitted;
  Eigen::MatrixXd design;      // regressors actually used, one row per observation
  Eigen::VectorXd response;
  std::vector<std::size_t> rows;  // source row of each observation
  double sigma2 = 0;  // SSR / df
  double ssr = 0;
  double loglik = 0;  // Gaussian, at the ML variance SSR / n
  double aic = 0;     // -2 loglik + 2 n_params
  double bic = 0;     // -2 loglik + n_params ln n
  double r_squared = 0;
  Eigen::Index n_obs = 0;
  Eigen::Index df = 0;

  Eigen::Index n_params() const { return coefficients.size(); }
  double se(Eigen::Index i) const;
  double t_stat(Eigen::Index i) const;
  double p_value(Eigen::Index i) const;  // two-sided, Student t with df
  Eigen::Index index_of(const std::string& name) const;
};

// Least squares of y on the columns of X as given (add a column of ones for
// an intercept). Throws DataError on rank deficiency, naming the columns that
// are linear combinations of the others, or when n_obs <= n_params.
OlsFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X, std::vector<std::string> names);

// Series/Dataset form: listwise deletion of rows with any missing value.
OlsFit ols(const Series& y, const Dataset& X, bool intercept);

// Wald F statistic for R b = r with the fit's covariance: (Rb-r)'(R V R')^{-1}(Rb-r) / rows(R).
double wald_f(const OlsFit& fit, const Eigen::MatrixXd& R, const Eigen::VectorXd& r);

}  // namespace powsec::stats
