#include "powsec/sim/trace_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "powsec/error.hpp"

namespace powsec::sim {
namespace {

std::string real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(std::string_view s) {
  std::string tmp(s);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (end == tmp.c_str() || *end != '\0') throw DataError("trace csv: bad number '" + tmp + "'");
  return v;
}

std::int64_t to_int(std::string_view s) {
  std::string tmp(s);
  char* end = nullptr;
  const long long v = std::strtoll(tmp.c_str(), &end, 10);
  if (end == tmp.c_str() || *end != '\0') throw DataError("trace csv: bad integer '" + tmp + "'");
  return v;
}

}  // namespace

std::string trace_csv(const SimTrace& trace) {
  std::string out = "# seed=" + std::to_string(trace.config.seed) + "\n";
  out += "height,sim_time,winner,difficulty,reward_fiat\n";
  for (const Block& b : trace.blocks) {
    out += std::to_string(b.height);
    out += ',' + real(b.sim_time);
    out += ',' + std::to_string(b.winner);
    out += ',' + real(b.difficulty);
    out += ',' + real(b.reward_fiat);
    out += '\n';
  }
  return out;
}

std::vector<Block> parse_trace_csv(std::string_view text) {
  std::vector<Block> blocks;
  bool header_seen = false;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != "height,sim_time,winner,difficulty,reward_fiat") {
        throw DataError("trace csv: unexpected header '" + std::string(line) + "'");
      }
      header_seen = true;
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != 5) throw DataError("trace csv: expected 5 columns in '" + std::string(line) + "'");
    blocks.push_back(Block{to_int(cells[0]), to_double(cells[1]), to_int(cells[2]), to_double(cells[3]),
                           to_double(cells[4])});
  }
  return blocks;
}

std::string trace_summary_json(const SimTrace& trace) {
  using nlohmann::ordered_json;
  const SimConfig& c = trace.config;
  ordered_json cfg = {
      {"seed", c.seed},
      {"initial_miners", c.initial_miners},
      {"horizon_blocks", c.horizon_blocks},
      {"target_spacing", c.target_spacing},
      {"retarget_interval", c.retarget_interval},
      {"max_retarget_factor", c.max_retarget_factor},
      {"price",
       {{"kind", c.price.kind == PriceProcess::Kind::Constant ? "constant" : "geometric_random_walk"},
        {"initial_price", c.price.initial_price},
        {"drift", c.price.drift},
        {"volatility", c.price.volatility}}},
      {"reward_coins", c.reward_coins},
      {"params",
       {{"gamma", c.params.gamma},
        {"rho", c.params.rho},
        {"delta", c.params.delta},
        {"fixed_cost", c.params.fixed_cost},
        {"variable_cost", c.params.variable_cost},
        {"equipment_price", c.params.equipment_price}}},
      {"entry_exit_enabled", c.entry_exit_enabled},
      {"min_miners", c.min_miners},
      {"max_miners", c.max_miners},
  };
  if (c.initial_difficulty) cfg["initial_difficulty"] = *c.initial_difficulty;

  double fiat = 0;
  for (const Block& b : trace.blocks) fiat += b.reward_fiat;
  ordered_json daily = ordered_json::array();
  for (const DailyAggregate& d : trace.daily) {
    daily.push_back({{"day", d.day},
                     {"block_count", d.block_count},
                     {"total_capacity", d.total_capacity},
                     {"winner_concentration", d.winner_concentration},
                     {"average_spacing", d.average_spacing},
                     {"price", d.price}});
  }
  std::int64_t active = 0;
  for (const MinerAgent& m : trace.final_miners) active += m.active ? 1 : 0;

  ordered_json summary = {
      {"seed", c.seed},
      {"rng", "mt19937_64"},
      {"config", cfg},
      {"blocks", trace.blocks.size()},
      {"stalled", trace.stalled},
      {"final_time", trace.blocks.empty() ? 0.0 : trace.blocks.back().sim_time},
      {"final_difficulty", trace.blocks.empty() ? 0.0 : trace.blocks.back().difficulty},
      {"total_fiat_paid", fiat},
      {"final_active_miners", active},
      {"final_network_capacity", trace.capacity_path.empty() ? 0.0 : trace.capacity_path.back()},
      {"daily", daily},
  };
  return summary.dump(2) + "\n";
}

}  // namespace powsec::sim
