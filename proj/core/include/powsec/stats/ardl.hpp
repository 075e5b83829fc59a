#pragma once

// ARDL(p, q_1..q_k) in levels,
//   y_t = b0 + sum_{i=1}^p phi_i y_{t-i} + sum_j sum_{i=0}^{q_j} beta_{j,i} x_{j,t-i} + u_t,
// AIC order selection, the Pesaran-Shin-Smith bounds F-test (case III) and
// the error-correction re-parameterisation.

#include <optional>
#include <string>
#include <vector>

#include "powsec/stats/critical_values.hpp"
#include "powsec/stats/ols.hpp"
#include "powsec/stats/series.hpp"

namespace powsec::stats {

// Dependent and explanatory series on a common index; NaN marks missing.
struct ArdlData {
  std::string y_name;
  std::vector<double> y;
  std::vector<std::string> x_names;
  std::vector<std::vector<double>> x;

  std::size_t size() const { return y.size(); }
  std::size_t k() const { return x.size(); }
};

ArdlData make_ardl_data(const Dataset& data, const std::string& y, const std::vector<std::string>& xs);

struct ArdlOrder {
  int p = 1;
  std::vector<int> q;

  int max_lag() const;
  int n_params() const;  // intercept + p + sum (q_j + 1)
  std::string to_string() const;  // "(p, q1, q2)"
  bool operator==(const ArdlOrder&) const = default;
};

struct ArdlFit {
  ArdlOrder order;
  OlsFit ols;
  ArdlData data;
  std::size_t sample_start = 0;

  // Coefficient positions: const, L1..Lp of y, then lags 0..q_j of each x_j.
  Eigen::Index y_lag_column(int lag) const { return lag; }
  Eigen::Index x_column(std::size_t j, int lag) const;
};

// Rows t >= sample_start (default: the order's max lag) with every needed
// value present. Throws on infeasible orders.
ArdlFit fit_ardl(const ArdlData& data, const ArdlOrder& order, std::optional<std::size_t> sample_start = {});

struct OrderCandidate {
  ArdlOrder order;
  double aic = 0;
  int n_params = 0;
};

struct OrderSelection {
  ArdlOrder best;
  double aic = 0;
  std::size_t sample_start = 0;
  std::vector<OrderCandidate> candidates;
};

// Full grid p in [1, p_max], each q_j in [0, q_max], every candidate fit on
// the sample trimmed by max(p_max, q_max). Minimum AIC wins; ties go to fewer
// parameters, then the lexicographically smallest (p, q_1, ...).
OrderSelection select_ardl_order(const ArdlData& data, int p_max, int q_max,
                                 std::size_t max_candidates = 200'000);

enum class BoundsDecision { NotCointegrated, Inconclusive, Cointegrated };
std::string to_string(BoundsDecision d);

struct BoundsResult {
  double f_statistic = 0;
  int k = 0;
  double level = 0.05;
  double lower = 0;  // I(0)
  double upper = 0;  // I(1)
  BoundsDecision decision = BoundsDecision::Inconclusive;
};

BoundsDecision bounds_decision(double f_statistic, const BoundsCriticalValues& bounds);

// F statistic for joint nullity of the lagged levels y_{t-1}, x_{j,t-1} in the
// unrestricted error-correction form. Computed as the equivalent Wald test
// sum(phi) = 1, sum_i beta_{j,i} = 0 on the levels fit.
double bounds_f_statistic(const ArdlFit& fit);

// Throws DataError when no critical values exist for (k, level).
BoundsResult bounds_test(const ArdlFit& fit, double level);

struct Coefficient {
  std::string name;
  double estimate = 0;
  double se = 0;
  double p_value = 0;
};

struct EcmFit {
  Coefficient alpha;              // speed of adjustment, sum(phi) - 1
  std::vector<Coefficient> longrun;   // theta_j = sum_i beta_{j,i} / (1 - sum phi)
  std::vector<Coefficient> shortrun;  // psi on lagged dy, then dx_{j,t-i}
  Coefficient intercept;
  std::optional<double> speed_days;   // 1/|alpha| for alpha < 0
  bool longrun_defined = true;        // false at sum(phi) = 1

  std::vector<double> psi_y;               // i = 1..p-1
  std::vector<std::vector<double>> psi_x;  // per regressor, i = 0..max(q_j - 1, 0)
  std::vector<double> level_coefficients;  // sum_i beta_{j,i}
};

std::optional<double> speed_of_adjustment_days(double alpha);

EcmFit to_ecm(const ArdlFit& fit);

// Levels fitted values rebuilt from (alpha, theta, psi, intercept) over the
// fit's sample; an algebraic identity with fit.ols.fitted.
Eigen::VectorXd ecm_fitted_levels(const EcmFit& ecm, const ArdlFit& fit);

// First-difference ARDL without an error-correction term:
// dy_t on const, dy_{t-1..t-p+1}, dx_{j,t..t-max(q_j-1,0)}.
OlsFit fit_difference_model(const ArdlData& data, const ArdlOrder& order);

}  // namespace powsec::stats
