#pragma once

// Alignment of the daily block aggregates with external daily series into
// the estimation dataset, its log transform and its CSV form.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powsec/data/daily.hpp"
#include "powsec/data/hardware.hpp"
#include "powsec/stats/series.hpp"

namespace powsec::data {

// Columns of the estimation dataset, in file order after `date`.
const std::vector<std::string>& dataset_columns();

struct ExternalSeries {
  std::string name;  // electricity_eu, electricity_cn, electricity_na, treasury_10y or hashrate
  std::string unit;
  stats::Series series;
};

// Unit label for a known external series name; throws InvalidParameter otherwise.
std::string external_unit(const std::string& name);

// Two-column CSV (date,value); empty or non-numeric values are missing.
ExternalSeries load_external(const std::string& name, const std::string& path);

struct AlignOptions {
  Date start = parse_date("2014-12-27");
  Date end = parse_date("2021-01-10");
  std::vector<HardwareEpoch> epochs = embedded_hardware_epochs();
};

// Calendar-day index over the window intersected with the daily records'
// range and every external's range. Externals are forward-filled. The
// hashrate column is the external "hashrate" series when given, else the
// implied rate. Throws DataError on an empty intersection.
stats::Dataset align_and_fill(std::span<const DailyRecord> daily, std::span<const ExternalSeries> externals,
                              const AlignOptions& options = {});

inline constexpr double kLogFloor = 0.001;

// ln(max(x, 0.001)) for every value; missing stays missing.
double floored_log(double x);
stats::Dataset log_transform(const stats::Dataset& data);

// date then each column; missing values are empty fields, numbers %.12g.
std::string dataset_csv(const stats::Dataset& data);
stats::Dataset parse_dataset_csv(const std::string& text);
stats::Dataset read_dataset_csv(const std::string& path);

}  // namespace powsec::data
