#include "powsec/data/hardware.hpp"

#include <algorithm>
#include <sstream>

#include "powsec/data/csv.hpp"
#include "powsec/error.hpp"

namespace powsec::data {

const std::vector<HardwareEpoch>& embedded_hardware_epochs() {
  static const std::vector<HardwareEpoch> epochs{
      {"ARM Cortex A9", parse_date("2007-10-03"), 877193},
      {"ATI 5870M", parse_date("2009-09-23"), 264550},
      {"X6500 FPGA Miner", parse_date("2011-08-29"), 43000},
      {"Canaan AvalonMiner B1", parse_date("2013-01-01"), 9351},
      {"KnCMiner Jupiter", parse_date("2013-10-05"), 1484},
      {"Antminer U1", parse_date("2013-12-01"), 1250},
      {"Bitfury BF864C55", parse_date("2014-03-03"), 500},
      {"RockerBox", parse_date("2014-07-22"), 316},
      {"ASICMiner BE300", parse_date("2014-09-16"), 187},
      {"BM1385", parse_date("2015-08-19"), 181},
      {"PickAxe", parse_date("2015-09-23"), 140},
      {"Antminer S9-11.5", parse_date("2016-06-01"), 98},
      {"Antminer R4", parse_date("2017-02-01"), 97},
      {"Ebang Ebit 10", parse_date("2018-02-15"), 92},
      {"8 Nano Compact", parse_date("2018-05-01"), 51},
      {"Antminer S17", parse_date("2019-04-09"), 36},
      {"Antminer S19 Pro", parse_date("2020-03-23"), 30},
  };
  return epochs;
}

void validate(std::span<const HardwareEpoch> epochs) {
  if (epochs.empty()) throw DataError("hardware table is empty");
  for (std::size_t i = 0; i < epochs.size(); ++i) {
    if (!(epochs[i].joules_per_th > 0.0)) throw DataError("hardware table: J/TH must be > 0 for " + epochs[i].device);
    if (i == 0) continue;
    if (!(epochs[i].start > epochs[i - 1].start)) throw DataError("hardware table: start dates must increase");
    if (!(epochs[i].joules_per_th < epochs[i - 1].joules_per_th)) {
      throw DataError("hardware table: J/TH must decrease, see " + epochs[i].device);
    }
  }
}

std::vector<HardwareEpoch> load_hardware_epochs(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw DataError("hardware table '" + path + "' is empty");
  const char d = detect_delimiter(line);
  std::vector<HardwareEpoch> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_line(line, d);
    HardwareEpoch e;
    if (f.size() != 3 || !parse_double(f[2], e.joules_per_th)) {
      throw DataError(path + ":" + std::to_string(line_no) + ": expected device,date,joules_per_th");
    }
    e.device = f[0];
    e.start = parse_date(f[1]);
    out.push_back(std::move(e));
  }
  validate(out);
  return out;
}

const HardwareEpoch& epoch_at(std::span<const HardwareEpoch> epochs, Date d) {
  const auto it = std::upper_bound(epochs.begin(), epochs.end(), d,
                                   [](Date v, const HardwareEpoch& e) { return v < e.start; });
  if (it == epochs.begin()) throw DataError("date " + format_date(d) + " precedes the first hardware epoch");
  return *(it - 1);
}

double efficiency_gh_per_joule(const HardwareEpoch& e) { return 1000.0 / e.joules_per_th; }

stats::Series hardware_efficiency_series(std::span<const HardwareEpoch> epochs, std::span<const Date> dates) {
  stats::Series s;
  s.name = "hw_eff";
  s.dates.assign(dates.begin(), dates.end());
  for (Date d : dates) {
    s.values.push_back(efficiency_gh_per_joule(epoch_at(epochs, d)));
    s.missing.push_back(false);
  }
  return s;
}

}  // namespace powsec::data
