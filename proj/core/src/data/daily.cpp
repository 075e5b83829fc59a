#include "powsec/data/daily.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "powsec/data/concentration.hpp"

namespace powsec::data {

std::vector<DailyRecord> aggregate_daily(std::span<const BlockRecord> blocks) {
  if (blocks.empty()) return {};
  struct Acc {
    std::int64_t blocks = 0;
    double reward = 0;
    double difficulty = 0;
    std::map<std::string, std::int64_t> wins;
  };
  std::map<Date, Acc> days;
  for (const auto& b : blocks) {
    Acc& a = days[utc_day(b.time)];
    ++a.blocks;
    a.reward += b.reward_usd;
    a.difficulty += b.difficulty;
    ++a.wins[b.miner.empty() ? kUnknownMiner : b.miner];
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<DailyRecord> out;
  for (Date d = days.begin()->first; d <= days.rbegin()->first; d += std::chrono::days{1}) {
    DailyRecord r;
    r.date = d;
    const auto it = days.find(d);
    if (it == days.end()) {
      r.mining_reward = r.hhi = r.hhi_normalised = r.competition_intensity = r.difficulty = nan;
      r.implied_hashrate = nan;
      out.push_back(r);
      continue;
    }
    const Acc& a = it->second;
    const auto count = static_cast<double>(a.blocks);
    r.block_count = a.blocks;
    r.reward_total_usd = a.reward;
    r.mining_reward = a.reward / count;
    r.n_miners = static_cast<std::int64_t>(a.wins.size());
    std::vector<double> shares;
    for (const auto& [label, wins] : a.wins) shares.push_back(static_cast<double>(wins) / count);
    // Guard the sum-to-one check against rounding in the shares.
    double total = 0;
    for (double s : shares) total += s;
    for (double& s : shares) s /= total;
    r.hhi = hhi(shares);
    r.hhi_normalised = hhi_normalised(shares);
    r.competition_intensity = competition_intensity(r.n_miners);
    r.difficulty = a.difficulty / count;
    r.implied_hashrate = r.difficulty * std::ldexp(1.0, 32) * count / 86400.0;
    out.push_back(r);
  }
  return out;
}

}  // namespace powsec::data
