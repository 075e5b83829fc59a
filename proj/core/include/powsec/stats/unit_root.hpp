#pragma once

#include <optional>
#include <span>
#include <string>

#include "powsec/stats/critical_values.hpp"
#include "powsec/stats/series.hpp"

namespace powsec::stats {

struct UnitRootReport {
  std::string test;  // "ADF", "PP" or "DF-GLS"
  double statistic = 0;
  int lags = 0;  // augmentation lags (ADF, DF-GLS) or Bartlett bandwidth (PP)
  Deterministic det = Deterministic::Constant;
  CriticalValues critical;
  std::optional<double> p_value;
  std::size_t n_obs = 0;

  // H0 (unit root) rejected at the given level: statistic below its critical value.
  bool rejects(double level) const { return statistic < critical.at(level); }
  std::string conclusion() const;
};

// floor(12 (n/100)^{1/4})
int default_max_lags(std::size_t n);

// Regression of the difference on the lagged level, `det` terms and up to
// max_lags lagged differences; the lag count minimises AIC on a common
// sample, then the chosen model is refit on every usable row. NaN values
// drop the rows that touch them. Needs at least 20 usable observations.
UnitRootReport adf_test(std::span<const double> s, int max_lags, Deterministic det);
UnitRootReport adf_test(const Series& s, int max_lags, Deterministic det);

// Phillips-Perron Z_tau with a Bartlett-kernel long-run variance and
// bandwidth floor(4 (n/100)^{2/9}).
UnitRootReport pp_test(std::span<const double> s, Deterministic det);
UnitRootReport pp_test(const Series& s, Deterministic det);

// Elliott-Rothenberg-Stock GLS detrending (c-bar = -7 with a constant,
// -13.5 with a trend) followed by a Dickey-Fuller regression without
// deterministic terms. The lag is chosen by the Ng-Perron modified AIC on
// OLS-detrended data (Perron-Qu 2007); AIC on the GLS-detrended series picks
// very long lags for stationary data and destroys power. det must be Constant or Trend.
UnitRootReport dfgls_test(std::span<const double> s, int max_lags, Deterministic det);
UnitRootReport dfgls_test(const Series& s, int max_lags, Deterministic det);

}  // namespace powsec::stats
