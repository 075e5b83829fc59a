#pragma once

#include <string>

#include "powsec/data/dataset.hpp"
#include "powsec/sim/random.hpp"

namespace powsec::test {

inline std::string fixture(const std::string& name) { return std::string(POWSEC_FIXTURE_DIR) + "/" + name; }

inline stats::Dataset oracle_dataset() { return data::read_dataset_csv(fixture("oracle_series.csv")); }

inline std::vector<double> oracle_column(const std::string& name) {
  return oracle_dataset().column(name).with_nan();
}

// Uniform on [lo, hi).
inline double draw(sim::Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

}  // namespace powsec::test
