#include "powsec/data/concentration.hpp"

#include <cmath>

#include "powsec/error.hpp"

namespace powsec::data {
namespace {

void check_shares(std::span<const double> shares) {
  if (shares.empty()) throw InvalidParameter("shares", "empty");
  double total = 0;
  for (double s : shares) {
    if (!(s >= 0.0)) throw InvalidParameter("shares", "must be >= 0");
    total += s;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidParameter("shares", "must sum to 1");
}

}  // namespace

double hhi(std::span<const double> shares) {
  check_shares(shares);
  double h = 0;
  for (double s : shares) h += s * s;
  return h;
}

double hhi_normalised(std::span<const double> shares) {
  const double h = hhi(shares);
  const auto n = static_cast<double>(shares.size());
  if (shares.size() == 1) return 1.0;
  return (h - 1.0 / n) / (1.0 - 1.0 / n);
}

double competition_intensity(std::int64_t n) {
  if (n < 1) throw InvalidParameter("n", "must be >= 1");
  const auto x = static_cast<double>(n);
  return (x - 1.0) / (x * x);
}

}  // namespace powsec::data
