#pragma once

// Residual diagnostics for a fitted regression: serial correlation,
// heteroskedasticity, normality and parameter stability.

#include <string>
#include <vector>

#include "powsec/stats/ols.hpp"

namespace powsec::stats {

struct TestResult {
  std::string name;
  double statistic = 0;
  int df = 0;  // chi-squared degrees of freedom
  double p_value = 1;

  bool rejects(double level) const { return p_value < level; }
};

// Auxiliary regression of the residual on the original regressors and L
// lagged residuals (pre-sample lags set to zero); LM = n R^2 ~ chi2(L).
TestResult breusch_godfrey(const OlsFit& fit, int lags = 1);

// Durbin's alternative test: Wald chi2(L) on the lagged residuals of the
// same auxiliary regression.
TestResult durbin_alternative(const OlsFit& fit, int lags = 1);

// Breusch-Pagan / Cook-Weisberg on the fitted values: half the explained sum
// of squares of u^2 / sigma^2_ML on (1, yhat) ~ chi2(1).
TestResult breusch_pagan(const OlsFit& fit);

TestResult jarque_bera(const OlsFit& fit);

struct StabilityPath {
  std::string name;
  std::vector<double> statistic;
  std::vector<double> lower;
  std::vector<double> upper;
  bool stable = true;  // path stays inside the 5% bands
};

// Standardised recursive residuals w_t, t = k+1..n.
std::vector<double> recursive_residuals(const OlsFit& fit);

StabilityPath cusum(const OlsFit& fit);
StabilityPath cusum_of_squares(const OlsFit& fit);

struct DiagnosticsReport {
  TestResult breusch_godfrey;
  TestResult durbin_alternative;
  TestResult breusch_pagan;
  TestResult jarque_bera;
  StabilityPath cusum;
  StabilityPath cusum_of_squares;

  bool stable() const { return cusum.stable && cusum_of_squares.stable; }
};

DiagnosticsReport run_diagnostics(const OlsFit& fit, int lags = 1);

}  // namespace powsec::stats
