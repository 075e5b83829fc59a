#pragma once

// Seeded data-generating processes with known properties, used for
// estimator validation and the shipped example dataset.

#include <cstdint>
#include <vector>

#include "powsec/sim/random.hpp"
#include "powsec/stats/ardl.hpp"
#include "powsec/stats/series.hpp"

namespace powsec::stats::synthetic {

std::vector<double> white_noise(std::size_t n, sim::Rng& rng, double sigma = 1.0);
std::vector<double> random_walk(std::size_t n, sim::Rng& rng, double sigma = 1.0);
// Stationary AR(1) with zero mean, started from its stationary distribution.
std::vector<double> ar1(std::size_t n, double phi, sim::Rng& rng, double sigma = 1.0);
// a + b t + N(0, sigma^2)
std::vector<double> linear_trend(std::size_t n, double intercept, double slope, sim::Rng& rng, double sigma = 1.0);

// y_t = b0 + phi y_{t-1} + beta x_t + e_t with x_t iid N(0, 1).
ArdlData ardl_one_zero(std::size_t n, sim::Rng& rng, double b0 = 0.5, double phi = 0.8, double beta = 0.3,
                       double sigma = 1.0);

// x a random walk; dy_t = alpha (y_{t-1} - theta x_{t-1}) + e_t.
ArdlData cointegrated_pair(std::size_t n, sim::Rng& rng, double alpha = -0.5, double theta = 1.0);

// k + 1 mutually independent random walks.
ArdlData independent_walks(std::size_t n, sim::Rng& rng, std::size_t k = 1);

// Daily dataset with the pipeline's column layout from 2014-12-27. The
// hashrate column error-corrects towards mining_reward, elec_cn and hw_eff
// with speed -0.25; the remaining columns are unrelated random walks.
Dataset cointegrated_dataset(std::uint64_t seed, std::size_t n = 2207);

// As above, but hashrate is a random walk independent of everything else.
Dataset independent_dataset(std::uint64_t seed, std::size_t n = 2207);

}  // namespace powsec::stats::synthetic
