#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "powsec/econ/model.hpp"
#include "powsec/error.hpp"
#include "powsec/sim/random.hpp"
#include "powsec/sim/simulator.hpp"
#include "powsec/sim/trace_io.hpp"

using namespace powsec;
using namespace powsec::sim;

namespace {

econ::ModelParams params(double fixed_cost = 10) {
  econ::ModelParams p;
  p.gamma = 0.5;
  p.fixed_cost = fixed_cost;
  return p;
}

SimConfig base_config() {
  SimConfig c;
  c.seed = 42;
  c.params = params();
  c.reward_coins = 1;
  c.price.initial_price = 10;
  c.horizon_blocks = 2000;
  return c;
}

// Frequencies of each index over `draws` lotteries.
std::vector<double> frequencies(const std::vector<double>& caps, double gamma, int draws, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> f(caps.size(), 0.0);
  for (int i = 0; i < draws; ++i) f[draw_winner(caps, gamma, rng)] += 1.0 / draws;
  return f;
}

double three_sigma(double p, int draws) { return 3 * std::sqrt(p * (1 - p) / draws); }

}  // namespace

TEST(Rng, DeterministicAndInRange) {
  Rng a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    EXPECT_EQ(u, b.uniform());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  // The engine's 10000th output is fixed by the standard.
  Rng d(5489);
  for (int i = 0; i < 9999; ++i) d.next_u64();
  EXPECT_EQ(d.next_u64(), 9981545732273789042ULL);
}

TEST(Rng, MomentsOfTransforms) {
  Rng rng(9);
  const int n = 200000;
  double se = 0, sn = 0, sn2 = 0;
  for (int i = 0; i < n; ++i) {
    se += rng.exponential(600);
    const double z = rng.normal();
    sn += z;
    sn2 += z * z;
  }
  EXPECT_NEAR(se / n, 600, 600 * 4 / std::sqrt(n));
  EXPECT_NEAR(sn / n, 0, 4 / std::sqrt(n));
  EXPECT_NEAR(sn2 / n, 1, 4 * std::sqrt(2.0 / n));
}

TEST(Lottery, SymmetricMiners) {
  const int draws = 100000;
  const auto f = frequencies({3.0, 3.0}, 0.5, draws, 1);
  EXPECT_NEAR(f[0], 0.5, three_sigma(0.5, draws));
}

TEST(Lottery, LinearExponentHandCase) {
  const int draws = 100000;
  const auto f = frequencies({std::log(4.0), std::log(2.0)}, 1.0, draws, 2);
  EXPECT_NEAR(f[0], 2.0 / 3.0, three_sigma(2.0 / 3.0, draws));
}

TEST(Lottery, OddsRatioOnThreeMiners) {
  const int draws = 100000;
  const std::vector<double> caps{1.0, 4.0, 9.0};
  const auto f = frequencies(caps, 0.5, draws, 3);
  const double w[] = {std::exp(1.0), std::exp(2.0), std::exp(3.0)};
  const double total = w[0] + w[1] + w[2];
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(f[i], w[i] / total, three_sigma(w[i] / total, draws));
}

TEST(Lottery, HugeCapacitiesDoNotOverflow) {
  Rng rng(4);
  EXPECT_EQ(draw_winner(std::vector<double>{1e6, 1e8}, 0.9, rng), 1u);
}

TEST(Lottery, AllZeroIsAnError) {
  Rng rng(4);
  EXPECT_THROW(draw_winner(std::vector<double>{0.0, 0.0}, 0.5, rng), InvalidParameter);
}

TEST(Retarget, Rules) {
  SimConfig c;
  const double window = 2016 * 600.0;
  EXPECT_DOUBLE_EQ(retarget_difficulty(100, window, c), 100);
  EXPECT_DOUBLE_EQ(retarget_difficulty(100, window / 2, c), 200);
  EXPECT_DOUBLE_EQ(retarget_difficulty(100, window / 100, c), 400);
  EXPECT_DOUBLE_EQ(retarget_difficulty(100, window * 100, c), 25);
  EXPECT_THROW(retarget_difficulty(100, 0, c), InvalidParameter);
}

TEST(BestResponse, LandsOnEquilibrium) {
  SimState s;
  Rng rng(6);
  for (int i = 0; i < 5; ++i) s.miners.push_back(MinerAgent{i, 50 * rng.uniform(), 0, 0, true});
  const econ::Market m{10, 1};
  best_response_step(s, params(), m);
  const double target = econ::per_miner_capacity(params(), m, 5);
  for (const auto& a : s.miners) EXPECT_DOUBLE_EQ(a.capacity, target);
  best_response_step(s, params(), m);
  for (const auto& a : s.miners) EXPECT_DOUBLE_EQ(a.capacity, target);
}

TEST(BestResponse, PriceShockScalesCapacity) {
  SimState s;
  for (int i = 0; i < 4; ++i) s.miners.push_back(MinerAgent{i, 0, 0, 0, true});
  best_response_step(s, params(), econ::Market{10, 1});
  const double before = s.miners[0].capacity;
  best_response_step(s, params(), econ::Market{11, 1});
  EXPECT_NEAR(s.miners[0].capacity / before, std::pow(1.1, 2.0), 1e-12);
}

TEST(BestResponse, NeedsTwoMiners) {
  SimState s;
  s.miners.push_back(MinerAgent{0, 1, 0, 0, true});
  EXPECT_THROW(best_response_step(s, params(), econ::Market{10, 1}), InvalidParameter);
}

TEST(EntryExit, ZeroRewardShrinksToFloor) {
  SimState s;
  for (int i = 0; i < 6; ++i) s.miners.push_back(MinerAgent{i, 1, 0, 0, true});
  s.next_id = 6;
  for (int i = 0; i < 20; ++i) {
    const auto change = entry_exit(s, params(), econ::Market{0, 1});
    EXPECT_FALSE(change.entered);
  }
  EXPECT_EQ(s.active_count(), 1);
}

TEST(EntryExit, PopulationConvergesToFreeEntry) {
  auto c = base_config();
  c.entry_exit_enabled = true;
  c.initial_miners = 2;
  const auto trace = run_sim(c);
  const double n = econ::free_entry_miners(c.params, econ::Market{10, 1}).n;
  EXPECT_NEAR(static_cast<double>(trace.population_path.back()), n, 1.0);
}

TEST(EntryExit, HigherEntryCostWeaklyFewerMiners) {
  std::int64_t last = 1 << 30;
  for (double f : {5.0, 10.0, 20.0}) {
    auto c = base_config();
    c.params = params(f);
    c.entry_exit_enabled = true;
    c.initial_miners = 2;
    const auto n = run_sim(c).population_path.back();
    EXPECT_LE(n, last);
    last = n;
  }
}

TEST(Simulation, SameSeedSameTrace) {
  auto c = base_config();
  c.price.kind = PriceProcess::Kind::GeometricRandomWalk;
  c.price.volatility = 0.01;
  c.entry_exit_enabled = true;
  const auto a = run_sim(c);
  const auto b = run_sim(c);
  EXPECT_EQ(a.blocks, b.blocks);
  EXPECT_EQ(a.daily, b.daily);
  EXPECT_EQ(trace_csv(a), trace_csv(b));
  c.seed = 43;
  EXPECT_NE(run_sim(c).blocks, a.blocks);
}

TEST(Simulation, SpacingConvergesAfterRetargets) {
  auto c = base_config();
  c.horizon_blocks = 2016 * 30;
  c.initial_difficulty = 2.0 * 10 * econ::per_miner_capacity(c.params, econ::Market{10, 1}, 10);
  const auto trace = run_sim(c);
  const auto& blocks = trace.blocks;
  const std::size_t from = 2 * 2016;
  const double mean = (blocks.back().sim_time - blocks[from - 1].sim_time) / static_cast<double>(blocks.size() - from);
  EXPECT_NEAR(mean, 600.0, 6.0);
}

TEST(Simulation, ZeroPriceStalls) {
  auto c = base_config();
  c.price.initial_price = 0;
  const auto trace = run_sim(c);
  EXPECT_TRUE(trace.stalled);
  EXPECT_TRUE(trace.blocks.empty());
}

TEST(Simulation, InvalidConfig) {
  auto c = base_config();
  c.initial_miners = 0;
  EXPECT_THROW(run_sim(c), InvalidParameter);
  c = base_config();
  c.max_retarget_factor = 0.5;
  EXPECT_THROW(run_sim(c), InvalidParameter);
}

TEST(TraceIo, RoundTrip) {
  auto c = base_config();
  c.price.kind = PriceProcess::Kind::GeometricRandomWalk;
  c.price.volatility = 0.02;
  const auto trace = run_sim(c);
  const auto text = trace_csv(trace);
  EXPECT_EQ(text.rfind("# seed=42\n", 0), 0u);
  EXPECT_EQ(parse_trace_csv(text), trace.blocks);
}

TEST(Daily, AggregatesByDay) {
  const std::vector<Block> blocks{{1, 100, 0, 1, 10}, {2, 200, 0, 1, 10}, {3, 300, 1, 1, 10}, {4, 86500, 1, 1, 20}};
  const std::vector<double> caps{2, 2, 4, 8};
  const auto days = daily_aggregates(blocks, caps, 1.0);
  ASSERT_EQ(days.size(), 2u);
  EXPECT_EQ(days[0].block_count, 3);
  EXPECT_NEAR(days[0].winner_concentration, 5.0 / 9.0, 1e-12);
  EXPECT_NEAR(days[0].total_capacity, 8.0 / 3.0, 1e-12);
  EXPECT_NEAR(days[0].average_spacing, 100.0, 1e-12);
  EXPECT_EQ(days[1].day, 1);
  EXPECT_DOUBLE_EQ(days[1].price, 20.0);
}

TEST(AttackReplay, CostMatchesAnalytic) {
  auto c = base_config();
  c.initial_miners = 10;
  econ::AttackScenario s;
  s.duration_blocks = 6;
  s.recovery_fraction = 0.5;
  s.double_spend_coins = 3;
  const econ::Market m{10, 1};
  const auto r = attack_sim(c, s, c.params, m);
  EXPECT_NEAR(r.realized_cost, econ::attack_cost(s, c.params, m, 10).value, 1e-9);
  EXPECT_NEAR(r.realized_gain, econ::attack_gain(s, m), 1e-9);
  EXPECT_TRUE(r.succeeded);
  EXPECT_EQ(r.blocks.size(), 6u);
}

TEST(AttackReplay, FullPriceDropNeverPays) {
  auto c = base_config();
  c.initial_miners = 10;
  econ::AttackScenario s;
  s.price_drop = 1;
  s.recovery_fraction = 0.9;
  s.double_spend_coins = 100;
  EXPECT_LE(attack_sim(c, s, c.params, econ::Market{10, 1}).net_gain, 0.0);
}

TEST(AttackReplay, FreeAttackPays) {
  auto c = base_config();
  c.initial_miners = 10;
  c.params.variable_cost = 0;
  c.params.delta = 0;
  econ::AttackScenario s;
  s.recovery_fraction = 1;
  s.double_spend_coins = 5;
  EXPECT_TRUE(attack_sim(c, s, c.params, econ::Market{10, 1}).profitable);
}
