#include "powsec/data/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "powsec/data/csv.hpp"
#include "powsec/error.hpp"

namespace powsec::data {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::map<std::string, std::pair<std::string, std::string>>& externals_table() {
  // name -> (unit, dataset column)
  static const std::map<std::string, std::pair<std::string, std::string>> table{
      {"electricity_eu", {"EUR/MWh", "elec_eu"}},
      {"electricity_cn", {"USD/kWh", "elec_cn"}},
      {"electricity_na", {"CAD/MWh", "elec_na"}},
      {"treasury_10y", {"%", "treasury10y"}},
      {"hashrate", {"hash/s", "hashrate"}},
  };
  return table;
}

// Last observed value on or before each index date.
std::vector<double> forward_fill(const stats::Series& s, const std::vector<Date>& index) {
  std::vector<double> out(index.size(), kNaN);
  std::size_t j = 0;
  double last = kNaN;
  for (std::size_t i = 0; i < index.size(); ++i) {
    while (j < s.size() && s.dates[j] <= index[i]) {
      if (!s.missing[j]) last = s.values[j];
      ++j;
    }
    out[i] = last;
  }
  return out;
}

std::pair<Date, Date> observed_range(const stats::Series& s) {
  std::optional<Date> first;
  std::optional<Date> last;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.missing[i]) continue;
    if (!first) first = s.dates[i];
    last = s.dates[i];
  }
  if (!first) throw DataError("external series '" + s.name + "' has no observations");
  return {*first, *last};
}

stats::Series column(const std::string& name, std::vector<Date> index, std::vector<double> values) {
  stats::Series s;
  s.name = name;
  s.dates = std::move(index);
  s.values = std::move(values);
  s.missing.resize(s.values.size());
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    s.missing[i] = !std::isfinite(s.values[i]);
    if (s.missing[i]) s.values[i] = 0.0;
  }
  return s;
}

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

const std::vector<std::string>& dataset_columns() {
  static const std::vector<std::string> names{"hashrate", "difficulty",     "mining_reward", "elec_eu",
                                              "elec_cn",  "elec_na",        "hw_eff",        "n_miners",
                                              "comp_intensity", "hhi",      "hhi_norm",      "treasury10y"};
  return names;
}

std::string external_unit(const std::string& name) {
  const auto it = externals_table().find(name);
  if (it == externals_table().end()) throw InvalidParameter("external", "unknown series '" + name + "'");
  return it->second.first;
}

ExternalSeries load_external(const std::string& name, const std::string& path) {
  ExternalSeries out;
  out.name = name;
  out.unit = external_unit(name);
  out.series.name = name;
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw DataError("external series '" + path + "' is empty");
  const char d = detect_delimiter(line);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_line(line, d);
    if (f.size() < 2) throw DataError(path + ":" + std::to_string(line_no) + ": expected date,value");
    double v = 0;
    const bool ok = parse_double(f[1], v);
    out.series.dates.push_back(parse_date(f[0]));
    out.series.values.push_back(ok ? v : 0.0);
    out.series.missing.push_back(!ok);
  }
  stats::validate(out.series);
  return out;
}

stats::Dataset align_and_fill(std::span<const DailyRecord> daily, std::span<const ExternalSeries> externals,
                              const AlignOptions& options) {
  if (daily.empty()) throw DataError("no daily block records");
  Date lo = std::max(options.start, daily.front().date);
  Date hi = std::min(options.end, daily.back().date);
  for (const auto& e : externals) {
    external_unit(e.name);
    const auto [first, last] = observed_range(e.series);
    lo = std::max(lo, first);
    hi = std::min(hi, last);
  }
  if (lo > hi) throw DataError("date ranges do not overlap");

  std::vector<Date> index;
  for (Date d = lo; d <= hi; d += std::chrono::days{1}) index.push_back(d);
  const std::size_t n = index.size();

  std::map<std::string, std::vector<double>> cols;
  for (const auto& name : dataset_columns()) cols[name].assign(n, kNaN);

  std::map<Date, const DailyRecord*> by_date;
  for (const auto& r : daily) by_date[r.date] = &r;
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = by_date.find(index[i]);
    if (it == by_date.end() || it->second->block_count == 0) continue;
    const DailyRecord& r = *it->second;
    cols["hashrate"][i] = r.implied_hashrate;
    cols["difficulty"][i] = r.difficulty;
    cols["mining_reward"][i] = r.mining_reward;
    cols["n_miners"][i] = static_cast<double>(r.n_miners);
    cols["comp_intensity"][i] = r.competition_intensity;
    cols["hhi"][i] = r.hhi;
    cols["hhi_norm"][i] = r.hhi_normalised;
  }
  const auto hw = hardware_efficiency_series(options.epochs, index);
  cols["hw_eff"] = hw.values;
  for (const auto& e : externals) {
    cols[externals_table().at(e.name).second] = forward_fill(e.series, index);
  }

  stats::Dataset out(index);
  for (const auto& name : dataset_columns()) out.add(column(name, index, cols[name]));
  return out;
}

double floored_log(double x) { return std::log(std::max(x, kLogFloor)); }

stats::Dataset log_transform(const stats::Dataset& data) {
  stats::Dataset out(data.index());
  for (const auto& s : data.columns()) {
    stats::Series t = s;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t.missing[i]) t.values[i] = floored_log(t.values[i]);
    }
    out.add(std::move(t));
  }
  return out;
}

std::string dataset_csv(const stats::Dataset& data) {
  std::ostringstream os;
  os << "date";
  for (const auto& s : data.columns()) os << ',' << s.name;
  os << '\n';
  for (std::size_t i = 0; i < data.rows(); ++i) {
    os << format_date(data.index()[i]);
    for (const auto& s : data.columns()) {
      os << ',';
      if (!s.missing[i]) os << number(s.values[i]);
    }
    os << '\n';
  }
  return os.str();
}

stats::Dataset parse_dataset_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw DataError("dataset is empty");
  const auto header = split_line(line, ',');
  if (header.empty() || header[0] != "date") throw DataError("dataset header must start with 'date'");
  const std::size_t k = header.size() - 1;
  std::vector<Date> index;
  std::vector<std::vector<double>> values(k);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto f = split_line(line, ',');
    if (f.size() != header.size()) {
      throw DataError("dataset line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                      " fields");
    }
    index.push_back(parse_date(f[0]));
    for (std::size_t j = 0; j < k; ++j) {
      double v = kNaN;
      if (!f[j + 1].empty() && !parse_double(f[j + 1], v)) {
        throw DataError("dataset line " + std::to_string(line_no) + ": '" + f[j + 1] + "' is not a number");
      }
      values[j].push_back(v);
    }
  }
  stats::Dataset out(index);
  for (std::size_t j = 0; j < k; ++j) {
    auto s = column(header[j + 1], index, std::move(values[j]));
    stats::validate(s);
    out.add(std::move(s));
  }
  return out;
}

stats::Dataset read_dataset_csv(const std::string& path) { return parse_dataset_csv(read_file(path)); }

}  // namespace powsec::data
