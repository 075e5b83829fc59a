#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "powsec/sim/simulator.hpp"

namespace powsec::sim {

// One row per block: height,sim_time,winner,difficulty,reward_fiat, preceded
// by a "# seed=<n>" line. Reals use %.17g so the text round-trips exactly.
std::string trace_csv(const SimTrace& trace);

// Inverse of trace_csv's block rows; '#' lines are skipped.
std::vector<Block> parse_trace_csv(std::string_view text);

// Run summary: config echo, seed, totals and daily aggregates.
std::string trace_summary_json(const SimTrace& trace);

}  // namespace powsec::sim
