#include "powsec/stats/critical_values.hpp"

#include <array>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "powsec/error.hpp"

namespace powsec::stats {
namespace {

// Rows: 1%, 5%, 10%. Columns: c_inf, c1, c2, c3.
using Surface = std::array<std::array<double, 4>, 3>;

constexpr Surface kTauNone{{{-2.56574, -2.2358, -3.627, 0.0},
                            {-1.94100, -0.2686, -3.365, 31.223},
                            {-1.61682, 0.2656, -2.714, 25.364}}};
constexpr Surface kTauConst{{{-3.43035, -6.5393, -16.786, -79.433},
                             {-2.86154, -2.8903, -4.234, -40.040},
                             {-2.56677, -1.5384, -2.809, 0.0}}};
constexpr Surface kTauTrend{{{-3.95877, -9.0531, -28.428, -134.155},
                             {-3.41049, -4.3904, -9.036, -45.374},
                             {-3.12705, -2.5856, -3.925, -22.380}}};

// MacKinnon (1994) p-value polynomials in tau, one I(1) series.
struct PValueSurface {
  double tau_star;
  double tau_min;
  double tau_max;
  std::array<double, 3> small;
  std::array<double, 4> large;
};
constexpr PValueSurface kPNone{-1.04, -19.04, std::numeric_limits<double>::infinity(),
                               {0.6344, 1.2378, 0.032496},
                               {0.4797, 0.93557, -0.06999, 0.033066}};
constexpr PValueSurface kPConst{-1.61, -18.83, 2.74,
                                {2.1659, 1.4412, 0.038269},
                                {1.7339, 0.93202, -0.12745, -0.010368}};
constexpr PValueSurface kPTrend{-2.89, -16.18, 0.7,
                                {3.2512, 1.6047, 0.049588},
                                {2.5261, 0.61654, -0.37956, -0.060285}};

// ERS (1996) Table 1, trend case (c-bar = -13.5): T, 1%, 5%, 10%.
constexpr std::array<std::array<double, 4>, 4> kErsTrend{{{50, -3.77, -3.19, -2.89},
                                                          {100, -3.58, -3.03, -2.74},
                                                          {200, -3.46, -2.93, -2.64},
                                                          {0 /* T = infinity */, -3.48, -2.89, -2.57}}};

struct BoundsRow {
  double i0_10, i1_10, i0_5, i1_5, i0_1, i1_1;
};
// k = 1..10
constexpr std::array<BoundsRow, 10> kPssCaseIII{{
    {4.04, 4.78, 4.94, 5.73, 6.84, 7.84},
    {3.17, 4.14, 3.79, 4.85, 5.15, 6.36},
    {2.72, 3.77, 3.23, 4.35, 4.29, 5.61},
    {2.45, 3.52, 2.86, 4.01, 3.74, 5.06},
    {2.26, 3.35, 2.62, 3.79, 3.41, 4.68},
    {2.12, 3.23, 2.45, 3.61, 3.15, 4.43},
    {2.03, 3.13, 2.32, 3.50, 2.96, 4.26},
    {1.95, 3.06, 2.22, 3.39, 2.79, 4.10},
    {1.88, 2.99, 2.14, 3.30, 2.65, 3.97},
    {1.83, 2.94, 2.06, 3.24, 2.54, 3.86},
}};

int level_index(double level) {
  if (std::abs(level - 0.01) < 1e-12) return 0;
  if (std::abs(level - 0.05) < 1e-12) return 1;
  if (std::abs(level - 0.10) < 1e-12) return 2;
  return -1;
}

const Surface& surface(Deterministic det) {
  switch (det) {
    case Deterministic::None: return kTauNone;
    case Deterministic::Constant: return kTauConst;
    case Deterministic::Trend: return kTauTrend;
  }
  return kTauConst;
}

}  // namespace

std::string_view to_string(Deterministic det) {
  switch (det) {
    case Deterministic::None: return "none";
    case Deterministic::Constant: return "const";
    case Deterministic::Trend: return "trend";
  }
  return "const";
}

Deterministic parse_deterministic(std::string_view text) {
  if (text == "none") return Deterministic::None;
  if (text == "const") return Deterministic::Constant;
  if (text == "trend") return Deterministic::Trend;
  throw InvalidParameter("det", "expected none, const or trend, got '" + std::string(text) + "'");
}

double CriticalValues::at(double level) const {
  switch (level_index(level)) {
    case 0: return one;
    case 1: return five;
    case 2: return ten;
    default: throw InvalidParameter("level", "expected 0.01, 0.05 or 0.10");
  }
}

CriticalValues dickey_fuller_critical_values(Deterministic det, std::size_t nobs) {
  if (nobs == 0) throw InvalidParameter("nobs", "must be > 0");
  const double inv = 1.0 / static_cast<double>(nobs);
  std::array<double, 3> out{};
  const Surface& s = surface(det);
  for (int i = 0; i < 3; ++i) {
    const auto& c = s[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = c[0] + inv * (c[1] + inv * (c[2] + inv * c[3]));
  }
  return {out[0], out[1], out[2]};
}

double dickey_fuller_p_value(double tau, Deterministic det) {
  const PValueSurface& s = det == Deterministic::None ? kPNone : det == Deterministic::Constant ? kPConst : kPTrend;
  if (tau > s.tau_max) return 1.0;
  if (tau < s.tau_min) return 0.0;
  double z = 0;
  if (tau <= s.tau_star) {
    z = s.small[0] + tau * (s.small[1] + tau * s.small[2]);
  } else {
    z = s.large[0] + tau * (s.large[1] + tau * (s.large[2] + tau * s.large[3]));
  }
  return boost::math::cdf(boost::math::normal(), z);
}

CriticalValues dfgls_trend_critical_values(std::size_t nobs) {
  if (nobs == 0) throw InvalidParameter("nobs", "must be > 0");
  const double x = 1.0 / static_cast<double>(nobs);
  // Nodes in 1/T, ascending: infinity (0), 200, 100, 50.
  const std::array<std::size_t, 4> order{3, 2, 1, 0};
  auto node_x = [&](std::size_t r) { return kErsTrend[r][0] == 0 ? 0.0 : 1.0 / kErsTrend[r][0]; };
  std::size_t hi_i = 1;
  while (hi_i + 1 < order.size() && node_x(order[hi_i]) < x) ++hi_i;
  const std::size_t a = order[hi_i - 1];
  const std::size_t b = order[hi_i];
  // Beyond T = 50 the end segment is extrapolated.
  const double w = (x - node_x(a)) / (node_x(b) - node_x(a));
  auto lerp = [&](std::size_t col) { return kErsTrend[a][col] + w * (kErsTrend[b][col] - kErsTrend[a][col]); };
  return {lerp(1), lerp(2), lerp(3)};
}

std::optional<BoundsCriticalValues> pesaran_bounds(int k, double level) {
  const int li = level_index(level);
  if (k < 1 || k > 10 || li < 0) return std::nullopt;
  const BoundsRow& row = kPssCaseIII[static_cast<std::size_t>(k - 1)];
  switch (li) {
    case 0: return BoundsCriticalValues{row.i0_1, row.i1_1};
    case 1: return BoundsCriticalValues{row.i0_5, row.i1_5};
    default: return BoundsCriticalValues{row.i0_10, row.i1_10};
  }
}

}  // namespace powsec::stats
