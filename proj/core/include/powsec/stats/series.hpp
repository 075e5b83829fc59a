#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powsec/date.hpp"

namespace powsec::stats {

// Date-indexed real series with an explicit missing-value mask.
struct Series {
  std::string name;
  std::vector<Date> dates;
  std::vector<double> values;
  std::vector<bool> missing;

  std::size_t size() const { return values.size(); }
  bool is_missing(std::size_t i) const { return missing[i]; }
  std::optional<double> at(std::size_t i) const {
    return missing[i] ? std::nullopt : std::optional<double>(values[i]);
  }
  // Values with NaN in missing slots; estimation code works on this form.
  std::vector<double> with_nan() const;
};

// Throws DataError unless dates strictly increase and the vectors agree in length.
void validate(const Series& s);

// Consecutive daily dates from `start`; NaN entries become missing.
Series make_series(std::string name, std::span<const double> values, Date start = parse_date("2000-01-01"));

// Aligned collection of series on one date index. Adding a series whose
// index differs is an error; nothing is reindexed implicitly.
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<Date> index) : index_(std::move(index)) {}

  const std::vector<Date>& index() const { return index_; }
  const std::vector<Series>& columns() const { return columns_; }
  std::size_t rows() const { return index_.size(); }

  void add(Series s);
  bool contains(const std::string& name) const;
  const Series& column(const std::string& name) const;
  Series& column(const std::string& name);
  std::vector<std::string> names() const;

 private:
  std::vector<Date> index_;
  std::vector<Series> columns_;
};

}  // namespace powsec::stats
