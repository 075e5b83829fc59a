#pragma once

// Most efficient mining device over time, as a closed-left step function.

#include <span>
#include <string>
#include <vector>

#include "powsec/date.hpp"
#include "powsec/stats/series.hpp"

namespace powsec::data {

struct HardwareEpoch {
  std::string device;
  Date start{};
  double joules_per_th = 0;
};

const std::vector<HardwareEpoch>& embedded_hardware_epochs();

// CSV with columns device,date,joules_per_th.
std::vector<HardwareEpoch> load_hardware_epochs(const std::string& path);

// Start dates strictly increasing, J/TH positive and strictly decreasing.
void validate(std::span<const HardwareEpoch> epochs);

// Latest epoch starting on or before `d`; throws DataError before the first.
const HardwareEpoch& epoch_at(std::span<const HardwareEpoch> epochs, Date d);

// Compute per energy, GH per J = 1000 / (J per TH).
double efficiency_gh_per_joule(const HardwareEpoch& e);

stats::Series hardware_efficiency_series(std::span<const HardwareEpoch> epochs, std::span<const Date> dates);

}  // namespace powsec::data
