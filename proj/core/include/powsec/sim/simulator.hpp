#pragma once

// Agent-based mining contest: learning-by-mining winner lottery, difficulty
// retargeting, symmetric best response, one-at-a-time entry/exit and a
// majority-attack replay. Runs are single-threaded and deterministic given
// the seed.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "powsec/econ/model.hpp"
#include "powsec/sim/random.hpp"

namespace powsec::sim {

struct PriceProcess {
  enum class Kind { Constant, GeometricRandomWalk };
  Kind kind = Kind::Constant;
  double initial_price = 1.0;
  double drift = 0.0;       // mu, per block in log price
  double volatility = 0.0;  // sigma, per block in log price
};

struct SimConfig {
  std::uint64_t seed = 1;
  std::int64_t initial_miners = 10;
  std::int64_t horizon_blocks = 10'000;
  double target_spacing = 600.0;  // seconds
  std::int64_t retarget_interval = 2016;
  double max_retarget_factor = 4.0;
  PriceProcess price;
  double reward_coins = 6.25;
  econ::ModelParams params;
  bool entry_exit_enabled = false;
  std::int64_t min_miners = 1;
  std::int64_t max_miners = 10'000;
  // Difficulty is in capacity units: expected spacing is
  // target_spacing * difficulty / total_capacity. Defaults to the initial
  // total capacity, i.e. on target.
  std::optional<double> initial_difficulty;
};

void validate(const SimConfig& config);

struct MinerAgent {
  std::int64_t id = 0;
  double capacity = 0;               // m_i, compute-units
  double cumulative_investment = 0;  // sum of I_i, compute-units
  double cash = 0;
  bool active = true;
};

struct Block {
  std::int64_t height = 0;
  double sim_time = 0;  // seconds since start, at the block's arrival
  std::int64_t winner = 0;
  double difficulty = 0;
  double reward_fiat = 0;

  bool operator==(const Block&) const = default;
};

struct DailyAggregate {
  std::int64_t day = 0;
  std::int64_t block_count = 0;
  double total_capacity = 0;        // mean network capacity over the day's blocks
  double winner_concentration = 0;  // HHI of blocks won
  double average_spacing = 0;       // seconds
  double price = 0;                 // mean reward_fiat / reward_coins

  bool operator==(const DailyAggregate&) const = default;
};

struct SimTrace {
  SimConfig config;
  std::vector<Block> blocks;
  std::vector<double> capacity_path;          // network capacity in force at each block
  std::vector<std::int64_t> population_path;  // active miners at each block
  std::vector<DailyAggregate> daily;
  std::vector<MinerAgent> final_miners;
  bool stalled = false;  // network capacity hit zero; no further blocks can arrive
};

struct SimState {
  std::vector<MinerAgent> miners;
  std::int64_t next_id = 0;

  std::int64_t active_count() const;
  double total_capacity() const;
};

// Index i drawn with probability e^{m_i^gamma} / sum_j e^{m_j^gamma}.
// gamma in (0, 1]; throws InvalidParameter if every capacity is zero.
std::size_t draw_winner(std::span<const double> capacities, double gamma, Rng& rng);

// prev * (interval * target / elapsed), clamped to [prev/f, prev*f].
double retarget_difficulty(double prev_difficulty, double elapsed, const SimConfig& config);

// Every active miner jumps to per_miner_capacity at the current active count.
// Requires at least two active miners.
void best_response_step(SimState& state, const econ::ModelParams& params, const econ::Market& market);

struct PopulationChange {
  bool entered = false;
  bool exited = false;
};

// One entrant if profit at n+1 is positive; the lowest-id active miner exits
// if profit at n is negative. Population stays within [min_miners, max_miners].
PopulationChange entry_exit(SimState& state, const econ::ModelParams& params, const econ::Market& market,
                            std::int64_t min_miners = 1, std::int64_t max_miners = 10'000);

SimState initial_state(const SimConfig& config);

SimTrace run_sim(const SimConfig& config);

std::vector<DailyAggregate> daily_aggregates(std::span<const Block> blocks, std::span<const double> capacity_path,
                                             double reward_coins);

struct AttackReport {
  double honest_capacity = 0;
  double attacker_capacity = 0;
  double realized_cost = 0;
  double realized_reward = 0;   // attack-period rewards valued after the price drop
  double double_spend_gain = 0; // V_A(Delta)
  double realized_gain = 0;     // realized_reward + double_spend_gain
  double net_gain = 0;
  bool succeeded = false;   // attacker holds the majority of capacity
  bool profitable = false;  // net_gain > 0
  bool negative_cost_bracket = false;
  std::vector<Block> blocks;
};

// Replays an s-block majority attack against an honest network of
// config.initial_miners miners at the symmetric equilibrium.
AttackReport attack_sim(const SimConfig& config, const econ::AttackScenario& scenario,
                        const econ::ModelParams& params, const econ::Market& market);

}  // namespace powsec::sim
