#pragma once

// Coefficient tables in the long-run / short-run layout: one row per
// variable with estimate, standard error, p-value and significance stars.

#include <string>
#include <vector>

#include "powsec/stats/ardl.hpp"
#include "powsec/stats/diagnostics.hpp"
#include "powsec/stats/unit_root.hpp"

namespace powsec::stats {

// "***" below 1%, "**" below 5%, "*" below 10%, else "".
std::string significance_stars(double p_value);

// Rows: theta_j per regressor, then ECT (alpha) and speed_of_adjustment_days.
std::string longrun_table_csv(const EcmFit& ecm);

// Rows: short-run terms, then the intercept.
std::string shortrun_table_csv(const EcmFit& ecm);

// Coefficient table of any fit, e.g. the first-difference model.
std::string coefficient_table_csv(const OlsFit& fit);

std::string unit_root_table_csv(const std::vector<std::pair<std::string, UnitRootReport>>& rows);

std::string diagnostics_table_csv(const DiagnosticsReport& report);

// Shortest round-trip decimal form; "nan"/"inf" for non-finite values.
std::string format_full(double v);
// Six significant digits, for human-facing tables.
std::string format_short(double v);

}  // namespace powsec::stats
