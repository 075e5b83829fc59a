#pragma once

#include <cstdint>
#include <span>

namespace powsec::data {

// sum of squared shares. Shares must be >= 0 and sum to 1 within 1e-9.
double hhi(std::span<const double> shares);

// (hhi - 1/n) / (1 - 1/n) over n = shares.size(); 1 when n = 1.
double hhi_normalised(std::span<const double> shares);

// (n - 1) / n^2, n >= 1.
double competition_intensity(std::int64_t n);

}  // namespace powsec::data
