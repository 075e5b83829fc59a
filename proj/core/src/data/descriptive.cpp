#include "powsec/data/descriptive.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "powsec/error.hpp"

namespace powsec::data {

std::vector<DescriptiveRow> descriptive_stats(const stats::Dataset& data) {
  if (data.rows() == 0 || data.columns().empty()) throw DataError("descriptive statistics of an empty dataset");
  std::vector<DescriptiveRow> out;
  for (const auto& s : data.columns()) {
    DescriptiveRow r;
    r.variable = s.name;
    r.min = std::numeric_limits<double>::infinity();
    r.max = -std::numeric_limits<double>::infinity();
    double sum = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.missing[i]) continue;
      ++r.obs;
      sum += s.values[i];
      r.min = std::min(r.min, s.values[i]);
      r.max = std::max(r.max, s.values[i]);
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (r.obs == 0) {
      r.mean = r.std_dev = r.min = r.max = nan;
    } else {
      r.mean = sum / static_cast<double>(r.obs);
      double ss = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s.missing[i]) ss += (s.values[i] - r.mean) * (s.values[i] - r.mean);
      }
      r.std_dev = r.obs > 1 ? std::sqrt(ss / static_cast<double>(r.obs - 1)) : nan;
    }
    out.push_back(r);
  }
  return out;
}

std::string descriptive_csv(const std::vector<DescriptiveRow>& rows) {
  auto num = [](double v) {
    if (std::isnan(v)) return std::string();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return std::string(buf);
  };
  std::ostringstream os;
  os << "variable,obs,mean,std_dev,min,max\n";
  for (const auto& r : rows) {
    os << r.variable << ',' << r.obs << ',' << num(r.mean) << ',' << num(r.std_dev) << ',' << num(r.min) << ','
       << num(r.max) << '\n';
  }
  return os.str();
}

}  // namespace powsec::data
