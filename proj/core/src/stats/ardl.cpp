#include "powsec/stats/ardl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "powsec/error.hpp"

namespace powsec::stats {

ArdlData make_ardl_data(const Dataset& data, const std::string& y, const std::vector<std::string>& xs) {
  if (!data.contains(y)) throw DataError("unknown column '" + y + "'");
  ArdlData out;
  out.y_name = y;
  out.y = data.column(y).with_nan();
  for (const auto& name : xs) {
    if (!data.contains(name)) throw DataError("unknown column '" + name + "'");
    if (name == y) throw InvalidParameter("x", "regressor '" + name + "' is the dependent variable");
    out.x_names.push_back(name);
    out.x.push_back(data.column(name).with_nan());
  }
  return out;
}

int ArdlOrder::max_lag() const {
  int m = p;
  for (int v : q) m = std::max(m, v);
  return m;
}

int ArdlOrder::n_params() const {
  int n = 1 + p;
  for (int v : q) n += v + 1;
  return n;
}

std::string ArdlOrder::to_string() const {
  std::string s = "(" + std::to_string(p);
  for (int v : q) s += ", " + std::to_string(v);
  return s + ")";
}

Eigen::Index ArdlFit::x_column(std::size_t j, int lag) const {
  Eigen::Index c = 1 + order.p;
  for (std::size_t i = 0; i < j; ++i) c += order.q[i] + 1;
  return c + lag;
}

namespace {

void check_order(const ArdlData& data, const ArdlOrder& order) {
  if (order.p < 1) throw InvalidParameter("p", "must be >= 1");
  if (order.q.size() != data.k()) throw InvalidParameter("q", "one lag order per regressor required");
  for (int v : order.q) {
    if (v < 0) throw InvalidParameter("q", "must be >= 0");
  }
  for (const auto& x : data.x) {
    if (x.size() != data.size()) throw DataError("regressor length differs from the dependent variable");
  }
}

bool next_lags(std::vector<int>& q, int q_max) {
  for (std::size_t j = q.size(); j-- > 0;) {
    if (q[j] < q_max) {
      ++q[j];
      return true;
    }
    q[j] = 0;
  }
  return false;
}

}  // namespace

ArdlFit fit_ardl(const ArdlData& data, const ArdlOrder& order, std::optional<std::size_t> sample_start) {
  check_order(data, order);
  const auto max_lag = static_cast<std::size_t>(order.max_lag());
  const std::size_t start = std::max(sample_start.value_or(max_lag), max_lag);

  std::vector<std::size_t> rows;
  for (std::size_t t = start; t < data.size(); ++t) {
    bool ok = std::isfinite(data.y[t]);
    for (int i = 1; i <= order.p && ok; ++i) ok = std::isfinite(data.y[t - static_cast<std::size_t>(i)]);
    for (std::size_t j = 0; j < data.k() && ok; ++j) {
      for (int i = 0; i <= order.q[j] && ok; ++i) ok = std::isfinite(data.x[j][t - static_cast<std::size_t>(i)]);
    }
    if (ok) rows.push_back(t);
  }

  const auto n = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index k = order.n_params();
  if (n <= k) {
    throw DataError("ARDL" + order.to_string() + ": " + std::to_string(n) + " usable observations for " +
                    std::to_string(k) + " parameters");
  }

  std::vector<std::string> names{"const"};
  for (int i = 1; i <= order.p; ++i) names.push_back("L" + std::to_string(i) + "." + data.y_name);
  for (std::size_t j = 0; j < data.k(); ++j) {
    names.push_back(data.x_names[j]);
    for (int i = 1; i <= order.q[j]; ++i) names.push_back("L" + std::to_string(i) + "." + data.x_names[j]);
  }

  Eigen::MatrixXd X(n, k);
  Eigen::VectorXd y(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::size_t t = rows[static_cast<std::size_t>(r)];
    y(r) = data.y[t];
    Eigen::Index c = 0;
    X(r, c++) = 1.0;
    for (int i = 1; i <= order.p; ++i) X(r, c++) = data.y[t - static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < data.k(); ++j) {
      for (int i = 0; i <= order.q[j]; ++i) X(r, c++) = data.x[j][t - static_cast<std::size_t>(i)];
    }
  }

  ArdlFit fit;
  fit.order = order;
  fit.ols = ols(y, X, std::move(names));
  fit.ols.rows = rows;
  fit.data = data;
  fit.sample_start = start;
  return fit;
}

OrderSelection select_ardl_order(const ArdlData& data, int p_max, int q_max, std::size_t max_candidates) {
  if (p_max < 1) throw InvalidParameter("p_max", "must be >= 1");
  if (q_max < 0) throw InvalidParameter("q_max", "must be >= 0");
  const std::size_t k = data.k();

  double grid = static_cast<double>(p_max);
  for (std::size_t j = 0; j < k; ++j) grid *= static_cast<double>(q_max + 1);
  if (grid > static_cast<double>(max_candidates)) {
    throw InvalidParameter("grid", "order grid has " + std::to_string(static_cast<long long>(grid)) +
                                       " candidates, above the limit of " + std::to_string(max_candidates));
  }

  OrderSelection out;
  out.sample_start = static_cast<std::size_t>(std::max(p_max, q_max));
  const int largest = 1 + p_max + static_cast<int>(k) * (q_max + 1);
  if (data.size() <= out.sample_start + static_cast<std::size_t>(largest)) {
    throw DataError("order grid infeasible: " + std::to_string(data.size()) + " observations for up to " +
                    std::to_string(largest) + " parameters after trimming " + std::to_string(out.sample_start));
  }

  ArdlOrder order;
  order.q.assign(k, 0);
  bool have_best = false;
  for (int p = 1; p <= p_max; ++p) {
    order.p = p;
    std::fill(order.q.begin(), order.q.end(), 0);
    do {
      const ArdlFit fit = fit_ardl(data, order, out.sample_start);
      const OrderCandidate cand{order, fit.ols.aic, order.n_params()};
      out.candidates.push_back(cand);
      // Enumeration is lexicographic, so equal AIC and equal size keeps the earlier order.
      if (!have_best || cand.aic < out.aic ||
          (cand.aic == out.aic && cand.n_params < out.best.n_params())) {
        out.best = cand.order;
        out.aic = cand.aic;
        have_best = true;
      }
    } while (next_lags(order.q, q_max));
  }
  return out;
}

std::string to_string(BoundsDecision d) {
  switch (d) {
    case BoundsDecision::NotCointegrated: return "no cointegration";
    case BoundsDecision::Inconclusive: return "inconclusive";
    case BoundsDecision::Cointegrated: return "cointegration";
  }
  return "inconclusive";
}

BoundsDecision bounds_decision(double f_statistic, const BoundsCriticalValues& bounds) {
  if (f_statistic > bounds.upper) return BoundsDecision::Cointegrated;
  if (f_statistic < bounds.lower) return BoundsDecision::NotCointegrated;
  return BoundsDecision::Inconclusive;
}

double bounds_f_statistic(const ArdlFit& fit) {
  const std::size_t k = fit.data.k();
  const Eigen::Index cols = fit.ols.n_params();
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k) + 1, cols);
  Eigen::VectorXd r = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k) + 1);
  for (int i = 1; i <= fit.order.p; ++i) R(0, fit.y_lag_column(i)) = 1.0;
  r(0) = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    for (int i = 0; i <= fit.order.q[j]; ++i) R(static_cast<Eigen::Index>(j) + 1, fit.x_column(j, i)) = 1.0;
  }
  return wald_f(fit.ols, R, r);
}

BoundsResult bounds_test(const ArdlFit& fit, double level) {
  const int k = static_cast<int>(fit.data.k());
  const auto cv = pesaran_bounds(k, level);
  if (!cv) {
    throw DataError("no bounds critical values for k=" + std::to_string(k) + " at level " + std::to_string(level));
  }
  BoundsResult out;
  out.f_statistic = bounds_f_statistic(fit);
  out.k = k;
  out.level = level;
  out.lower = cv->lower;
  out.upper = cv->upper;
  out.decision = bounds_decision(out.f_statistic, *cv);
  return out;
}

}  // namespace powsec::stats
