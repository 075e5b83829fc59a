#include "powsec/stats/series.hpp"

#include <cmath>
#include <limits>

#include "powsec/error.hpp"

namespace powsec::stats {

std::vector<double> Series::with_nan() const {
  std::vector<double> out(values);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (missing[i]) out[i] = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

void validate(const Series& s) {
  if (s.values.size() != s.missing.size() || s.values.size() != s.dates.size()) {
    throw DataError("series '" + s.name + "': dates, values and mask differ in length");
  }
  for (std::size_t i = 1; i < s.dates.size(); ++i) {
    if (!(s.dates[i - 1] < s.dates[i])) {
      throw DataError("series '" + s.name + "': dates not strictly increasing at " + format_date(s.dates[i]));
    }
  }
}

Series make_series(std::string name, std::span<const double> values, Date start) {
  Series s;
  s.name = std::move(name);
  s.values.assign(values.begin(), values.end());
  s.missing.resize(values.size());
  s.dates.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    s.dates[i] = start + std::chrono::days{static_cast<long>(i)};
    s.missing[i] = std::isnan(values[i]);
    if (s.missing[i]) s.values[i] = 0.0;
  }
  return s;
}

void Dataset::add(Series s) {
  validate(s);
  if (contains(s.name)) throw DataError("dataset already has a column named '" + s.name + "'");
  if (columns_.empty() && index_.empty()) index_ = s.dates;
  if (s.dates != index_) throw DataError("series '" + s.name + "' is not on the dataset's date index");
  columns_.push_back(std::move(s));
}

bool Dataset::contains(const std::string& name) const {
  for (const auto& c : columns_) {
    if (c.name == name) return true;
  }
  return false;
}

const Series& Dataset::column(const std::string& name) const {
  for (const auto& c : columns_) {
    if (c.name == name) return c;
  }
  throw DataError("dataset has no column '" + name + "'");
}

Series& Dataset::column(const std::string& name) {
  return const_cast<Series&>(static_cast<const Dataset&>(*this).column(name));
}

std::vector<std::string> Dataset::names() const {
  std::vector<std::string> out;
  for (const auto& c : columns_) out.push_back(c.name);
  return out;
}

}  // namespace powsec::stats
