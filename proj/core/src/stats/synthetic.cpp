#include "powsec/stats/synthetic.hpp"

#include <cmath>
#include <string>

#include "powsec/error.hpp"

namespace powsec::stats::synthetic {

std::vector<double> white_noise(std::size_t n, sim::Rng& rng, double sigma) {
  std::vector<double> out(n);
  for (auto& v : out) v = sigma * rng.normal();
  return out;
}

std::vector<double> random_walk(std::size_t n, sim::Rng& rng, double sigma) {
  std::vector<double> out(n);
  double level = 0;
  for (auto& v : out) {
    level += sigma * rng.normal();
    v = level;
  }
  return out;
}

std::vector<double> ar1(std::size_t n, double phi, sim::Rng& rng, double sigma) {
  if (!(std::abs(phi) < 1.0)) throw InvalidParameter("phi", "must satisfy |phi| < 1");
  std::vector<double> out(n);
  double v = sigma / std::sqrt(1.0 - phi * phi) * rng.normal();
  for (auto& o : out) {
    v = phi * v + sigma * rng.normal();
    o = v;
  }
  return out;
}

std::vector<double> linear_trend(std::size_t n, double intercept, double slope, sim::Rng& rng, double sigma) {
  std::vector<double> out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = intercept + slope * static_cast<double>(t) + sigma * rng.normal();
  return out;
}

ArdlData ardl_one_zero(std::size_t n, sim::Rng& rng, double b0, double phi, double beta, double sigma) {
  if (!(std::abs(phi) < 1.0)) throw InvalidParameter("phi", "must satisfy |phi| < 1");
  ArdlData d;
  d.y_name = "y";
  d.x_names = {"x"};
  d.x.assign(1, std::vector<double>(n));
  d.y.resize(n);
  // Start at the unconditional mean, then burn in.
  double y = b0 / (1.0 - phi);
  for (int i = 0; i < 200; ++i) y = b0 + phi * y + beta * rng.normal() + sigma * rng.normal();
  for (std::size_t t = 0; t < n; ++t) {
    const double x = rng.normal();
    y = b0 + phi * y + beta * x + sigma * rng.normal();
    d.x[0][t] = x;
    d.y[t] = y;
  }
  return d;
}

ArdlData cointegrated_pair(std::size_t n, sim::Rng& rng, double alpha, double theta) {
  if (!(alpha < 0.0 && alpha > -2.0)) throw InvalidParameter("alpha", "must lie in (-2, 0)");
  ArdlData d;
  d.y_name = "y";
  d.x_names = {"x"};
  d.x.assign(1, std::vector<double>(n));
  d.y.resize(n);
  double x = 0;
  double y = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double x_prev = x;
    x += rng.normal();
    y += alpha * (y - theta * x_prev) + rng.normal();
    d.x[0][t] = x;
    d.y[t] = y;
  }
  return d;
}

ArdlData independent_walks(std::size_t n, sim::Rng& rng, std::size_t k) {
  ArdlData d;
  d.y_name = "y";
  d.y = random_walk(n, rng);
  for (std::size_t j = 0; j < k; ++j) {
    d.x_names.push_back(k == 1 ? "x" : "x" + std::to_string(j + 1));
    d.x.push_back(random_walk(n, rng));
  }
  return d;
}

namespace {

const std::vector<std::string>& column_names() {
  static const std::vector<std::string> names{"hashrate", "difficulty", "mining_reward", "elec_eu",
                                              "elec_cn",  "elec_na",    "hw_eff",        "n_miners",
                                              "comp_intensity", "hhi",  "hhi_norm",      "treasury10y"};
  return names;
}

Dataset build(std::uint64_t seed, std::size_t n, bool cointegrated) {
  if (n < 30) throw InvalidParameter("n", "must be >= 30");
  sim::Rng rng(seed);
  std::vector<std::vector<double>> cols(column_names().size(), std::vector<double>(n));
  // Log-level random walks with modest drift for every regressor-like column.
  const double start[] = {18.0, 30.0, 11.0, 3.7, -2.3, 3.2, 0.2, 3.0, -1.0, -1.5, -2.0, 0.7};
  for (std::size_t c = 1; c < cols.size(); ++c) {
    double v = start[c];
    for (std::size_t t = 0; t < n; ++t) {
      v += 0.0005 + 0.02 * rng.normal();
      cols[c][t] = v;
    }
  }
  const auto& reward = cols[2];
  const auto& elec = cols[4];
  const auto& eff = cols[6];
  auto& y = cols[0];
  if (cointegrated) {
    const double alpha = -0.25;
    const double mu = 2.5;
    double prev = mu + 1.4 * reward[0] - 0.3 * elec[0] + 0.5 * eff[0];
    double prev_dy = 0;
    y[0] = prev;
    for (std::size_t t = 1; t < n; ++t) {
      const double ect = prev - mu - 1.4 * reward[t - 1] + 0.3 * elec[t - 1] - 0.5 * eff[t - 1];
      const double dy = alpha * ect + 0.2 * prev_dy + 0.3 * (reward[t] - reward[t - 1]) + 0.02 * rng.normal();
      y[t] = prev + dy;
      prev = y[t];
      prev_dy = dy;
    }
  } else {
    double v = start[0];
    for (std::size_t t = 0; t < n; ++t) {
      v += 0.0005 + 0.02 * rng.normal();
      y[t] = v;
    }
  }

  const Date first = parse_date("2014-12-27");
  std::vector<Date> index(n);
  for (std::size_t t = 0; t < n; ++t) index[t] = first + std::chrono::days{static_cast<long>(t)};
  Dataset out(index);
  for (std::size_t c = 0; c < cols.size(); ++c) out.add(make_series(column_names()[c], cols[c], first));
  return out;
}

}  // namespace

Dataset cointegrated_dataset(std::uint64_t seed, std::size_t n) { return build(seed, n, true); }
Dataset independent_dataset(std::uint64_t seed, std::size_t n) { return build(seed, n, false); }

}  // namespace powsec::stats::synthetic
