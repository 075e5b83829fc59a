#include <benchmark/benchmark.h>

#include "powsec/data/daily.hpp"
#include "powsec/econ/model.hpp"
#include "powsec/sim/random.hpp"
#include "powsec/sim/simulator.hpp"
#include "powsec/stats/ardl.hpp"
#include "powsec/stats/diagnostics.hpp"
#include "powsec/stats/synthetic.hpp"
#include "powsec/stats/unit_root.hpp"

using namespace powsec;

static void BM_PerMinerCapacity(benchmark::State& state) {
  econ::ModelParams p;
  const econ::Market m{1, 1000};
  double n = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(econ::per_miner_capacity(p, m, n));
    n = n > 500 ? 2 : n + 1;
  }
}
BENCHMARK(BM_PerMinerCapacity);

static void BM_FreeEntry(benchmark::State& state) {
  econ::ModelParams p;
  p.fixed_cost = 10;
  for (auto _ : state) benchmark::DoNotOptimize(econ::free_entry_miners(p, econ::Market{10, 1}).n);
}
BENCHMARK(BM_FreeEntry);

static void BM_Simulation(benchmark::State& state) {
  sim::SimConfig c;
  c.params.fixed_cost = 10;
  c.price.initial_price = 10;
  c.reward_coins = 1;
  c.horizon_blocks = state.range(0);
  c.entry_exit_enabled = true;
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_sim(c).blocks.size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulation)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_Adf(benchmark::State& state) {
  sim::Rng rng(1);
  const auto s = stats::synthetic::random_walk(static_cast<std::size_t>(state.range(0)), rng);
  const int lags = stats::default_max_lags(s.size());
  for (auto _ : state) benchmark::DoNotOptimize(stats::adf_test(s, lags, stats::Deterministic::Constant).statistic);
}
BENCHMARK(BM_Adf)->Arg(1000)->Arg(2207)->Unit(benchmark::kMillisecond);

static void BM_OrderSelection(benchmark::State& state) {
  const auto data = stats::synthetic::cointegrated_dataset(1);
  const auto ad = stats::make_ardl_data(data, "hashrate", {"mining_reward", "elec_cn", "hw_eff"});
  for (auto _ : state) benchmark::DoNotOptimize(stats::select_ardl_order(ad, 8, 4).aic);
}
BENCHMARK(BM_OrderSelection)->Unit(benchmark::kMillisecond);

static void BM_Diagnostics(benchmark::State& state) {
  sim::Rng rng(2);
  const auto fit = stats::fit_ardl(stats::synthetic::ardl_one_zero(2000, rng), stats::ArdlOrder{2, {2}});
  for (auto _ : state) benchmark::DoNotOptimize(stats::run_diagnostics(fit.ols).stable());
}
BENCHMARK(BM_Diagnostics)->Unit(benchmark::kMillisecond);

static void BM_AggregateDaily(benchmark::State& state) {
  std::vector<data::BlockRecord> blocks(static_cast<std::size_t>(state.range(0)));
  const auto t0 = parse_timestamp("2015-01-01T00:00:00");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].block_id = static_cast<std::int64_t>(i);
    blocks[i].time = t0 + std::chrono::seconds(600 * i);
    blocks[i].difficulty = 1e12;
    blocks[i].reward_usd = 5000;
    blocks[i].miner = "pool" + std::to_string(i % 17);
  }
  for (auto _ : state) benchmark::DoNotOptimize(data::aggregate_daily(blocks).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AggregateDaily)->Arg(315000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
