#include "powsec/error.hpp"
#include "powsec/sim/simulator.hpp"

#include <cmath>

namespace powsec::sim {

AttackReport attack_sim(const SimConfig& config, const econ::AttackScenario& scenario,
                        const econ::ModelParams& params, const econ::Market& market) {
  validate(config);
  econ::validate(scenario);
  if (config.initial_miners < 2) throw InvalidParameter("initial_miners", "honest network needs n >= 2");
  const auto n = static_cast<double>(config.initial_miners);
  const double m_star = econ::per_miner_capacity(params, market, n);

  AttackReport report;
  report.honest_capacity = n * m_star;
  report.attacker_capacity = scenario.capacity_multiple * report.honest_capacity;
  report.succeeded = report.attacker_capacity > report.honest_capacity;

  const double q = params.equipment_price;
  const double bracket = (params.variable_cost + q * params.delta) - (1.0 - scenario.recovery_fraction) * q;
  report.negative_cost_bracket = bracket < 0.0;
  const double cost_per_block = report.attacker_capacity * bracket;

  Rng rng(config.seed);
  const double combined = report.attacker_capacity + report.honest_capacity;
  const double difficulty = config.initial_difficulty.value_or(report.honest_capacity > 0 ? report.honest_capacity : 1.0);
  double price = market.exp_price;
  double time = 0;
  for (std::int64_t k = 1; k <= scenario.duration_blocks; ++k) {
    if (k > 1 && config.price.kind == PriceProcess::Kind::GeometricRandomWalk) {
      price *= std::exp(config.price.drift + config.price.volatility * rng.normal());
    }
    if (combined > 0.0) time += rng.exponential(config.target_spacing * difficulty / combined);
    // The majority chain is the attacker's; every block in the window is theirs.
    const double reward = (1.0 - scenario.price_drop) * price * market.reward_coins;
    report.blocks.push_back(Block{k, time, -1, difficulty, reward});
    report.realized_reward += reward;
    report.realized_cost += cost_per_block;
  }
  report.double_spend_gain = econ::double_spend_payoff(scenario, market);
  report.realized_gain = report.realized_reward + report.double_spend_gain;
  report.net_gain = report.realized_gain - report.realized_cost;
  report.profitable = report.net_gain > 0.0;
  return report;
}

}  // namespace powsec::sim
