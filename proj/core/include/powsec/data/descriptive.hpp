#pragma once

#include <string>
#include <vector>

#include "powsec/stats/series.hpp"

namespace powsec::data {

struct DescriptiveRow {
  std::string variable;
  std::size_t obs = 0;
  double mean = 0;
  double std_dev = 0;  // sample, n - 1
  double min = 0;
  double max = 0;
};

// One row per column over its non-missing values. Throws DataError on an empty dataset.
std::vector<DescriptiveRow> descriptive_stats(const stats::Dataset& data);

std::string descriptive_csv(const std::vector<DescriptiveRow>& rows);

}  // namespace powsec::data
