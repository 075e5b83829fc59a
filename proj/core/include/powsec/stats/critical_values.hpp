#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace powsec::stats {

enum class Deterministic { None, Constant, Trend };

std::string_view to_string(Deterministic det);
Deterministic parse_deterministic(std::string_view text);  // "none" | "const" | "trend"

struct CriticalValues {
  double one = 0;
  double five = 0;
  double ten = 0;

  double at(double level) const;  // level in {0.01, 0.05, 0.10}
};

// Identifies the transcription of the tables below.
inline constexpr std::string_view kCriticalTablesVersion = "2024.1";

// Dickey-Fuller tau for one I(1) series: MacKinnon (2010) finite-sample
// surface c_inf + c1/T + c2/T^2 + c3/T^3.
CriticalValues dickey_fuller_critical_values(Deterministic det, std::size_t nobs);

// MacKinnon (1994) approximate asymptotic p-value of a Dickey-Fuller tau.
double dickey_fuller_p_value(double tau, Deterministic det);

// DF-GLS with a linear trend: Elliott-Rothenberg-Stock (1996) Table 1,
// linearly interpolated in 1/T. With a constant only, the Dickey-Fuller
// no-deterministics values apply.
CriticalValues dfgls_trend_critical_values(std::size_t nobs);

struct BoundsCriticalValues {
  double lower = 0;  // I(0) bound
  double upper = 0;  // I(1) bound
};

// Pesaran-Shin-Smith (2001) Table CI(iii), case III (unrestricted intercept,
// no trend), asymptotic F bounds for k = 1..10 regressors at 1/5/10%.
std::optional<BoundsCriticalValues> pesaran_bounds(int k, double level);

}  // namespace powsec::stats
