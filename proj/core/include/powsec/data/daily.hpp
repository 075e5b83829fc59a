#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "powsec/data/blocks.hpp"
#include "powsec/date.hpp"

namespace powsec::data {

// Label used for blocks with no miner attribution.
inline constexpr const char* kUnknownMiner = "unknown";

struct DailyRecord {
  Date date{};
  std::int64_t block_count = 0;
  double reward_total_usd = 0;
  double mining_reward = 0;  // reward_total_usd / block_count
  std::int64_t n_miners = 0;
  double hhi = 0;            // over shares of blocks won
  double hhi_normalised = 0;
  double competition_intensity = 0;
  double difficulty = 0;        // mean over the day's blocks
  double implied_hashrate = 0;  // difficulty * 2^32 * block_count / 86400, hashes per second
};

// One record per UTC day from the first to the last block's day. Days with
// no blocks have block_count 0 and NaN in every per-block quantity.
std::vector<DailyRecord> aggregate_daily(std::span<const BlockRecord> blocks);

}  // namespace powsec::data
