#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>

#include "powsec/error.hpp"
#include "powsec/stats/ardl.hpp"

namespace powsec::stats {
namespace {

constexpr double kUnitRootTolerance = 1e-10;

Coefficient delta_method(std::string name, double estimate, const Eigen::VectorXd& gradient, const OlsFit& fit) {
  Coefficient c;
  c.name = std::move(name);
  c.estimate = estimate;
  const double var = gradient.dot(fit.covariance * gradient);
  c.se = std::sqrt(std::max(var, 0.0));
  if (c.se > 0 && std::isfinite(estimate) && fit.df > 0) {
    const boost::math::students_t dist(static_cast<double>(fit.df));
    c.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(estimate / c.se)));
  } else {
    c.p_value = std::numeric_limits<double>::quiet_NaN();
  }
  return c;
}

}  // namespace

std::optional<double> speed_of_adjustment_days(double alpha) {
  if (!(alpha < 0.0)) return std::nullopt;
  return 1.0 / std::abs(alpha);
}

EcmFit to_ecm(const ArdlFit& fit) {
  const OlsFit& o = fit.ols;
  const Eigen::VectorXd& b = o.coefficients;
  const Eigen::Index K = b.size();
  const int p = fit.order.p;
  const std::size_t k = fit.data.k();
  const std::string& y = fit.data.y_name;

  EcmFit out;
  Eigen::VectorXd g = Eigen::VectorXd::Zero(K);
  g(0) = 1.0;
  out.intercept = delta_method("const", b(0), g, o);

  double phi_sum = 0;
  g.setZero();
  for (int i = 1; i <= p; ++i) {
    phi_sum += b(fit.y_lag_column(i));
    g(fit.y_lag_column(i)) = 1.0;
  }
  out.alpha = delta_method("ECT", phi_sum - 1.0, g, o);
  out.speed_days = speed_of_adjustment_days(out.alpha.estimate);

  const double denom = 1.0 - phi_sum;
  out.longrun_defined = std::abs(denom) > kUnitRootTolerance;
  for (std::size_t j = 0; j < k; ++j) {
    double bsum = 0;
    for (int i = 0; i <= fit.order.q[j]; ++i) bsum += b(fit.x_column(j, i));
    out.level_coefficients.push_back(bsum);
    if (!out.longrun_defined) {
      out.longrun.push_back(Coefficient{fit.data.x_names[j], std::numeric_limits<double>::quiet_NaN(),
                                        std::numeric_limits<double>::quiet_NaN(),
                                        std::numeric_limits<double>::quiet_NaN()});
      continue;
    }
    g.setZero();
    for (int i = 1; i <= p; ++i) g(fit.y_lag_column(i)) = bsum / (denom * denom);
    for (int i = 0; i <= fit.order.q[j]; ++i) g(fit.x_column(j, i)) = 1.0 / denom;
    out.longrun.push_back(delta_method(fit.data.x_names[j], bsum / denom, g, o));
  }

  for (int i = 1; i <= p - 1; ++i) {
    g.setZero();
    double v = 0;
    for (int l = i + 1; l <= p; ++l) {
      v -= b(fit.y_lag_column(l));
      g(fit.y_lag_column(l)) = -1.0;
    }
    out.psi_y.push_back(v);
    out.shortrun.push_back(delta_method("L" + std::to_string(i) + ".D." + y, v, g, o));
  }
  out.psi_x.resize(k);
  for (std::size_t j = 0; j < k; ++j) {
    const int qj = fit.order.q[j];
    const std::string& x = fit.data.x_names[j];
    g.setZero();
    g(fit.x_column(j, 0)) = 1.0;
    out.psi_x[j].push_back(b(fit.x_column(j, 0)));
    out.shortrun.push_back(delta_method("D." + x, b(fit.x_column(j, 0)), g, o));
    for (int i = 1; i <= qj - 1; ++i) {
      g.setZero();
      double v = 0;
      for (int l = i + 1; l <= qj; ++l) {
        v -= b(fit.x_column(j, l));
        g(fit.x_column(j, l)) = -1.0;
      }
      out.psi_x[j].push_back(v);
      out.shortrun.push_back(delta_method("L" + std::to_string(i) + ".D." + x, v, g, o));
    }
  }
  return out;
}

Eigen::VectorXd ecm_fitted_levels(const EcmFit& ecm, const ArdlFit& fit) {
  const auto& d = fit.data;
  const auto n = static_cast<Eigen::Index>(fit.ols.rows.size());
  Eigen::VectorXd out(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::size_t t = fit.ols.rows[static_cast<std::size_t>(r)];
    double v = d.y[t - 1] + ecm.intercept.estimate;
    // alpha (y - sum theta x) equals alpha y + sum B x, which also holds at the boundary.
    v += ecm.alpha.estimate * d.y[t - 1];
    for (std::size_t j = 0; j < d.k(); ++j) v += ecm.level_coefficients[j] * d.x[j][t - 1];
    for (std::size_t i = 1; i <= ecm.psi_y.size(); ++i) v += ecm.psi_y[i - 1] * (d.y[t - i] - d.y[t - i - 1]);
    for (std::size_t j = 0; j < d.k(); ++j) {
      for (std::size_t i = 0; i < ecm.psi_x[j].size(); ++i) {
        v += ecm.psi_x[j][i] * (d.x[j][t - i] - d.x[j][t - i - 1]);
      }
    }
    out(r) = v;
  }
  return out;
}

OlsFit fit_difference_model(const ArdlData& data, const ArdlOrder& order) {
  if (order.p < 1) throw InvalidParameter("p", "must be >= 1");
  if (order.q.size() != data.k()) throw InvalidParameter("q", "one lag order per regressor required");
  const std::size_t k = data.k();
  std::vector<int> xl(k);
  for (std::size_t j = 0; j < k; ++j) xl[j] = std::max(order.q[j] - 1, 0);
  std::size_t start = static_cast<std::size_t>(order.p);
  for (int v : xl) start = std::max(start, static_cast<std::size_t>(v) + 1);

  std::vector<std::string> names{"const"};
  for (int i = 1; i <= order.p - 1; ++i) names.push_back("L" + std::to_string(i) + ".D." + data.y_name);
  for (std::size_t j = 0; j < k; ++j) {
    names.push_back("D." + data.x_names[j]);
    for (int i = 1; i <= xl[j]; ++i) names.push_back("L" + std::to_string(i) + ".D." + data.x_names[j]);
  }
  const auto cols = static_cast<Eigen::Index>(names.size());

  std::vector<std::vector<double>> rows_x;
  std::vector<double> rows_y;
  std::vector<std::size_t> rows;
  std::vector<double> row(static_cast<std::size_t>(cols));
  for (std::size_t t = start; t < data.size(); ++t) {
    std::size_t c = 0;
    row[c++] = 1.0;
    for (int i = 1; i <= order.p - 1; ++i) row[c++] = data.y[t - i] - data.y[t - i - 1];
    for (std::size_t j = 0; j < k; ++j) {
      for (int i = 0; i <= xl[j]; ++i) row[c++] = data.x[j][t - i] - data.x[j][t - i - 1];
    }
    const double dy = data.y[t] - data.y[t - 1];
    bool ok = std::isfinite(dy);
    for (double v : row) ok = ok && std::isfinite(v);
    if (!ok) continue;
    rows_x.push_back(row);
    rows_y.push_back(dy);
    rows.push_back(t);
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd X(n, cols);
  Eigen::VectorXd Y(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    Y(r) = rows_y[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < cols; ++c) X(r, c) = rows_x[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  OlsFit fit = ols(Y, X, std::move(names));
  fit.rows = std::move(rows);
  return fit;
}

}  // namespace powsec::stats
