#include "powsec/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "powsec/error.hpp"

namespace powsec::sim {

void validate(const SimConfig& c) {
  econ::validate(c.params);
  if (c.horizon_blocks < 1) throw InvalidParameter("horizon_blocks", "must be >= 1");
  if (!(c.target_spacing > 0.0)) throw InvalidParameter("target_spacing", "must be > 0");
  if (c.retarget_interval < 1) throw InvalidParameter("retarget_interval", "must be >= 1");
  if (!(c.max_retarget_factor >= 1.0)) throw InvalidParameter("max_retarget_factor", "must be >= 1");
  if (!(c.price.volatility >= 0.0)) throw InvalidParameter("price.volatility", "must be >= 0");
  if (!std::isfinite(c.price.drift)) throw InvalidParameter("price.drift", "must be finite");
  if (!(c.price.initial_price >= 0.0)) throw InvalidParameter("price.initial_price", "must be >= 0");
  if (!(c.reward_coins >= 0.0)) throw InvalidParameter("reward_coins", "must be >= 0");
  if (c.min_miners < 1) throw InvalidParameter("min_miners", "must be >= 1");
  if (c.max_miners < c.min_miners) throw InvalidParameter("max_miners", "must be >= min_miners");
  if (c.initial_miners < c.min_miners || c.initial_miners > c.max_miners) {
    throw InvalidParameter("initial_miners", "must lie in [min_miners, max_miners]");
  }
  if (c.initial_difficulty && !(*c.initial_difficulty > 0.0)) {
    throw InvalidParameter("initial_difficulty", "must be > 0");
  }
  if (!(c.params.effective_unit_cost() > 0.0)) {
    throw InvalidParameter("effective_unit_cost", "c + (rho+delta) q must be > 0");
  }
}

std::int64_t SimState::active_count() const {
  return std::count_if(miners.begin(), miners.end(), [](const MinerAgent& m) { return m.active; });
}

double SimState::total_capacity() const {
  double total = 0;
  for (const auto& m : miners) {
    if (m.active) total += m.capacity;
  }
  return total;
}

std::size_t draw_winner(std::span<const double> capacities, double gamma, Rng& rng) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw InvalidParameter("gamma", "must satisfy 0 < gamma <= 1");
  if (capacities.empty()) throw InvalidParameter("capacities", "no miners");
  double top = -std::numeric_limits<double>::infinity();
  bool any_positive = false;
  for (double m : capacities) {
    if (!(m >= 0.0) || !std::isfinite(m)) throw InvalidParameter("capacities", "must be finite and >= 0");
    any_positive = any_positive || m > 0.0;
    top = std::max(top, std::pow(m, gamma));
  }
  if (!any_positive) throw InvalidParameter("capacities", "all capacities are zero");

  // Shift exponents by the maximum so the largest weight is exactly 1.
  std::vector<double> cumulative(capacities.size());
  double total = 0;
  for (std::size_t i = 0; i < capacities.size(); ++i) {
    total += std::exp(std::pow(capacities[i], gamma) - top);
    cumulative[i] = total;
  }
  const double u = rng.uniform() * total;
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), capacities.size() - 1);
}

double retarget_difficulty(double prev_difficulty, double elapsed, const SimConfig& config) {
  if (!(elapsed > 0.0)) throw InvalidParameter("elapsed", "must be > 0");
  const double expected = static_cast<double>(config.retarget_interval) * config.target_spacing;
  const double proposed = prev_difficulty * (expected / elapsed);
  const double f = config.max_retarget_factor;
  return std::clamp(proposed, prev_difficulty / f, prev_difficulty * f);
}

void best_response_step(SimState& state, const econ::ModelParams& params, const econ::Market& market) {
  const auto n = state.active_count();
  if (n < 2) throw InvalidParameter("active_miners", "best response needs at least two active miners");
  const double m_star = econ::per_miner_capacity(params, market, static_cast<double>(n));
  for (auto& miner : state.miners) {
    if (!miner.active) continue;
    // m' = (1 - delta) m + I
    const double investment = m_star - (1.0 - params.delta) * miner.capacity;
    miner.cumulative_investment += investment;
    miner.cash -= params.equipment_price * investment;
    miner.capacity = m_star;
  }
}

PopulationChange entry_exit(SimState& state, const econ::ModelParams& params, const econ::Market& market,
                            std::int64_t min_miners, std::int64_t max_miners) {
  PopulationChange change;
  const auto n = state.active_count();
  if (n < max_miners && econ::steady_state_profit(params, market, static_cast<double>(n + 1)) > 0.0) {
    MinerAgent entrant;
    entrant.id = state.next_id++;
    entrant.cash = -params.fixed_cost;  // sunk at entry
    state.miners.push_back(entrant);
    change.entered = true;
  }
  if (n > min_miners && econ::steady_state_profit(params, market, static_cast<double>(n)) < 0.0) {
    // Miners are symmetric; the exiter is the lowest-id active miner.
    for (auto& miner : state.miners) {
      if (miner.active && !(change.entered && miner.id == state.next_id - 1)) {
        miner.active = false;
        miner.capacity = 0;
        change.exited = true;
        break;
      }
    }
  }
  return change;
}

SimState initial_state(const SimConfig& config) {
  SimState state;
  for (std::int64_t i = 0; i < config.initial_miners; ++i) {
    MinerAgent m;
    m.id = state.next_id++;
    m.cash = -config.params.fixed_cost;
    state.miners.push_back(m);
  }
  return state;
}

namespace {

struct DayAccumulator {
  std::int64_t blocks = 0;
  double capacity_sum = 0;
  double spacing_sum = 0;
  double price_sum = 0;
  std::map<std::int64_t, std::int64_t> wins;
};

}  // namespace

std::vector<DailyAggregate> daily_aggregates(std::span<const Block> blocks, std::span<const double> capacity_path,
                                             double reward_coins) {
  if (capacity_path.size() != blocks.size()) {
    throw InvalidParameter("capacity_path", "must have one entry per block");
  }
  std::map<std::int64_t, DayAccumulator> days;
  double previous_time = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    auto& acc = days[static_cast<std::int64_t>(std::floor(b.sim_time / 86400.0))];
    ++acc.blocks;
    acc.capacity_sum += capacity_path[i];
    acc.spacing_sum += b.sim_time - previous_time;
    acc.price_sum += reward_coins > 0 ? b.reward_fiat / reward_coins : 0.0;
    ++acc.wins[b.winner];
    previous_time = b.sim_time;
  }
  std::vector<DailyAggregate> out;
  out.reserve(days.size());
  for (const auto& [day, acc] : days) {
    DailyAggregate d;
    d.day = day;
    d.block_count = acc.blocks;
    const double count = static_cast<double>(acc.blocks);
    d.total_capacity = acc.capacity_sum / count;
    d.average_spacing = acc.spacing_sum / count;
    d.price = acc.price_sum / count;
    for (const auto& [winner, wins] : acc.wins) {
      const double share = static_cast<double>(wins) / count;
      d.winner_concentration += share * share;
    }
    out.push_back(d);
  }
  return out;
}

SimTrace run_sim(const SimConfig& config) {
  validate(config);
  SimTrace trace;
  trace.config = config;
  Rng rng(config.seed);
  SimState state = initial_state(config);
  const auto& params = config.params;

  double price = config.price.initial_price;
  econ::Market market{price, config.reward_coins};
  if (state.active_count() >= 2) best_response_step(state, params, market);
  double difficulty = config.initial_difficulty.value_or(state.total_capacity());
  if (!(difficulty > 0.0)) difficulty = 1.0;

  double time = 0;
  double window_start = 0;
  std::vector<double> active_caps;
  std::vector<std::size_t> active_index;
  trace.blocks.reserve(static_cast<std::size_t>(config.horizon_blocks));

  for (std::int64_t height = 1; height <= config.horizon_blocks; ++height) {
    if (height > 1 && config.price.kind == PriceProcess::Kind::GeometricRandomWalk) {
      price *= std::exp(config.price.drift + config.price.volatility * rng.normal());
    }
    market.exp_price = price;
    if (config.entry_exit_enabled) {
      entry_exit(state, params, market, config.min_miners, config.max_miners);
    }
    if (state.active_count() >= 2) best_response_step(state, params, market);

    const double capacity = state.total_capacity();
    if (!(capacity > 0.0)) {
      trace.stalled = true;
      break;
    }
    time += rng.exponential(config.target_spacing * difficulty / capacity);

    active_caps.clear();
    active_index.clear();
    for (std::size_t i = 0; i < state.miners.size(); ++i) {
      if (state.miners[i].active) {
        active_caps.push_back(state.miners[i].capacity);
        active_index.push_back(i);
      }
    }
    MinerAgent& winner = state.miners[active_index[draw_winner(active_caps, params.gamma, rng)]];
    const double reward = price * config.reward_coins;
    winner.cash += reward;
    for (auto& m : state.miners) {
      if (m.active) m.cash -= params.variable_cost * m.capacity;
    }

    trace.blocks.push_back(Block{height, time, winner.id, difficulty, reward});
    trace.capacity_path.push_back(capacity);
    trace.population_path.push_back(state.active_count());

    if (height % config.retarget_interval == 0) {
      difficulty = retarget_difficulty(difficulty, time - window_start, config);
      window_start = time;
    }
  }

  trace.daily = daily_aggregates(trace.blocks, trace.capacity_path, config.reward_coins);
  trace.final_miners = std::move(state.miners);
  return trace;
}

}  // namespace powsec::sim
