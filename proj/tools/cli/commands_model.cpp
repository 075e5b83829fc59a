#include <sstream>

#include "context.hpp"
#include "powsec/econ/model.hpp"
#include "powsec/error.hpp"
#include "powsec/sim/simulator.hpp"
#include "powsec/sim/trace_io.hpp"

namespace powsec::cli {
namespace {

std::vector<Field> model_fields() {
  return {
      {"gamma", FieldType::Real, nullptr, "learning exponent, 0 < gamma < 1"},
      {"rho", FieldType::Real, 0.05, "discount rate per period"},
      {"delta", FieldType::Real, 0.1, "depreciation rate per period"},
      {"fixed-cost", FieldType::Real, nullptr, "entry cost F (needed for free entry)"},
      {"variable-cost", FieldType::Real, 1.0, "running cost c per compute-unit"},
      {"equipment-price", FieldType::Real, 10.0, "equipment price q per compute-unit"},
      {"price", FieldType::Real, nullptr, "expected coin price E(p)"},
      {"reward", FieldType::Real, 1.0, "coins per block R"},
  };
}

econ::ModelParams model(const Context& ctx) {
  econ::ModelParams p;
  p.gamma = ctx.required_real("gamma");
  p.rho = ctx.real("rho");
  p.delta = ctx.real("delta");
  p.fixed_cost = ctx.optional_real("fixed-cost").value_or(0.0);
  p.variable_cost = ctx.real("variable-cost");
  p.equipment_price = ctx.real("equipment-price");
  econ::validate(p);
  return p;
}

econ::Market market(const Context& ctx) {
  econ::Market m;
  m.exp_price = ctx.required_real("price");
  m.reward_coins = ctx.real("reward");
  econ::validate(m);
  return m;
}

econ::FreeEntryOptions free_entry_options(const Context& ctx) {
  econ::FreeEntryOptions o;
  const std::string e = ctx.text("exponent");
  if (e == "consistent") {
    o.exponent = econ::FreeEntryExponent::Consistent;
  } else if (e == "as-printed") {
    o.exponent = econ::FreeEntryExponent::AsPrinted;
  } else {
    throw UsageError("--exponent must be consistent or as-printed");
  }
  return o;
}

// Miner count: --n when given, else the free-entry solution.
double miner_count(const Context& ctx, const econ::ModelParams& p, const econ::Market& m, Json& result) {
  if (ctx.has("n")) {
    const double n = ctx.real("n");
    if (!(n >= 1.0)) throw InvalidParameter("n", "must be >= 1");
    result["mode"] = "fixed-n";
    return n;
  }
  if (!ctx.has("fixed-cost")) throw UsageError("--fixed-cost is required when --n is not given");
  const auto eq = econ::free_entry_miners(p, m, free_entry_options(ctx));
  result["mode"] = "free-entry";
  result["iterations"] = eq.iterations;
  result["method"] = eq.method;
  return eq.n;
}

std::vector<Field> with(std::vector<Field> base, std::initializer_list<Field> more) {
  base.insert(base.end(), more.begin(), more.end());
  return base;
}

std::string render(const Context& ctx, const Json& result) {
  if (ctx.format == "csv") return flat_csv(result);
  Json report = ctx.header();
  report["result"] = result;
  return dump(report);
}

}  // namespace

std::vector<Field> equilibrium_fields() {
  return with(model_fields(), {
                                  {"n", FieldType::Real, nullptr, "evaluate at this miner count instead of free entry"},
                                  {"exponent", FieldType::Text, "consistent", "free-entry exponent: consistent|as-printed"},
                              });
}

std::vector<Field> attack_fields() {
  return with(model_fields(),
              {
                  {"n", FieldType::Real, nullptr, "honest miner count; free entry when absent"},
                  {"exponent", FieldType::Text, "consistent", "free-entry exponent: consistent|as-printed"},
                  {"capacity-multiple", FieldType::Real, 1.01, "attacker capacity as a multiple A > 1 of honest"},
                  {"duration", FieldType::Integer, std::int64_t{6}, "attack length s in blocks"},
                  {"recovery", FieldType::Real, 0.0, "fraction theta of equipment value recovered"},
                  {"price-drop", FieldType::Real, 0.0, "post-attack price drop Delta in [0, 1]"},
                  {"double-spend", FieldType::Real, 0.0, "coins X double-spent"},
                  {"replay", FieldType::Flag, false, "also replay the attack block by block"},
              });
}

std::vector<Field> simulate_fields() {
  return with(model_fields(),
              {
                  {"miners", FieldType::Integer, std::int64_t{10}, "initial miners"},
                  {"blocks", FieldType::Integer, std::int64_t{10000}, "horizon in blocks"},
                  {"target-spacing", FieldType::Real, 600.0, "target seconds per block"},
                  {"retarget-interval", FieldType::Integer, std::int64_t{2016}, "blocks between retargets"},
                  {"max-retarget-factor", FieldType::Real, 4.0, "clamp on each retarget"},
                  {"entry-exit", FieldType::Flag, false, "enable one-at-a-time entry and exit"},
                  {"min-miners", FieldType::Integer, std::int64_t{1}, "population floor"},
                  {"max-miners", FieldType::Integer, std::int64_t{10000}, "population cap"},
                  {"price-process", FieldType::Text, "constant", "constant|grw"},
                  {"drift", FieldType::Real, 0.0, "log-price drift per block"},
                  {"volatility", FieldType::Real, 0.0, "log-price volatility per block"},
                  {"initial-difficulty", FieldType::Real, nullptr, "starting difficulty in capacity units"},
              });
}

int cmd_equilibrium(Context& ctx) {
  const auto p = model(ctx);
  const auto m = market(ctx);
  Json result;
  const double n = miner_count(ctx, p, m, result);
  const double m_star = econ::per_miner_capacity(p, m, n);
  result["n"] = n;
  if (result["mode"] == "free-entry") result["n_integer"] = econ::integer_free_entry(p, m, n);
  result["m_star"] = m_star;
  result["network_capacity"] = econ::network_capacity(p, m, n);
  result["foc_residual"] = n > 1.0 ? econ::foc_residual(p, m, n, m_star) : 0.0;
  result["profit"] = econ::steady_state_profit(p, m, n);
  result["reward_elasticity"] = econ::reward_elasticity(p);
  result["cost_elasticity"] = econ::cost_elasticity(p);
  ctx.emit(ctx.format == "csv" ? "equilibrium.csv" : "equilibrium.json", render(ctx, result));
  return 0;
}

int cmd_attack(Context& ctx) {
  const auto p = model(ctx);
  const auto m = market(ctx);
  econ::AttackScenario s;
  s.capacity_multiple = ctx.real("capacity-multiple");
  s.duration_blocks = ctx.integer("duration");
  s.recovery_fraction = ctx.real("recovery");
  s.price_drop = ctx.real("price-drop");
  s.double_spend_coins = ctx.real("double-spend");
  econ::validate(s);

  Json result;
  const double n = miner_count(ctx, p, m, result);
  const auto check = econ::is_incentive_compatible(s, p, m, n);
  result["n"] = n;
  result["compatible"] = check.compatible;
  result["margin"] = check.margin;
  result["cost"] = check.cost;
  result["gain"] = check.gain;
  result["double_spend_value"] = econ::double_spend_payoff(s, m);
  result["beta"] = check.beta;
  result["beta_form_margin"] = check.beta_form_margin ? Json(*check.beta_form_margin) : Json(nullptr);
  result["forms_agree"] = check.forms_agree;
  result["negative_cost_bracket"] = check.negative_bracket;
  const auto be = econ::break_even_price_drop(s, p, m, n);
  result["break_even_price_drop"] = be ? Json(*be) : Json("none in [0,1]");

  if (ctx.flag("replay")) {
    sim::SimConfig cfg;
    cfg.seed = ctx.seed;
    cfg.initial_miners = static_cast<std::int64_t>(n < 2.0 ? 2.0 : n);
    cfg.params = p;
    cfg.reward_coins = m.reward_coins;
    cfg.price.initial_price = m.exp_price;
    cfg.max_miners = std::max<std::int64_t>(cfg.max_miners, cfg.initial_miners);
    const auto r = sim::attack_sim(cfg, s, p, m);
    Json replay;
    replay["honest_capacity"] = r.honest_capacity;
    replay["attacker_capacity"] = r.attacker_capacity;
    replay["realized_cost"] = r.realized_cost;
    replay["realized_gain"] = r.realized_gain;
    replay["net_gain"] = r.net_gain;
    replay["succeeded"] = r.succeeded;
    replay["profitable"] = r.profitable;
    if (ctx.format == "csv") {
      for (const auto& [k, v] : replay.items()) result["replay_" + k] = v;
    } else {
      result["replay"] = replay;
    }
  }
  ctx.emit(ctx.format == "csv" ? "attack.csv" : "attack.json", render(ctx, result));
  return 0;
}

int cmd_simulate(Context& ctx) {
  sim::SimConfig cfg;
  cfg.seed = ctx.seed;
  cfg.params = model(ctx);
  cfg.initial_miners = ctx.integer("miners");
  cfg.horizon_blocks = ctx.integer("blocks");
  cfg.target_spacing = ctx.real("target-spacing");
  cfg.retarget_interval = ctx.integer("retarget-interval");
  cfg.max_retarget_factor = ctx.real("max-retarget-factor");
  cfg.entry_exit_enabled = ctx.flag("entry-exit");
  cfg.min_miners = ctx.integer("min-miners");
  cfg.max_miners = ctx.integer("max-miners");
  cfg.reward_coins = ctx.real("reward");
  cfg.price.initial_price = ctx.required_real("price");
  const std::string process = ctx.text("price-process");
  if (process == "constant") {
    cfg.price.kind = sim::PriceProcess::Kind::Constant;
  } else if (process == "grw") {
    cfg.price.kind = sim::PriceProcess::Kind::GeometricRandomWalk;
  } else {
    throw UsageError("--price-process must be constant or grw");
  }
  cfg.price.drift = ctx.real("drift");
  cfg.price.volatility = ctx.real("volatility");
  if (ctx.has("initial-difficulty")) cfg.initial_difficulty = ctx.real("initial-difficulty");
  sim::validate(cfg);

  const auto trace = sim::run_sim(cfg);
  ctx.write("trace.csv", sim::trace_csv(trace));
  if (ctx.format == "csv") {
    std::ostringstream os;
    os << "day,block_count,total_capacity,winner_concentration,average_spacing,price\n";
    for (const auto& d : trace.daily) {
      os << d.day << ',' << d.block_count << ',' << number(d.total_capacity) << ','
         << number(d.winner_concentration) << ',' << number(d.average_spacing) << ',' << number(d.price) << '\n';
    }
    ctx.write("daily.csv", os.str());
  } else {
    Json report = ctx.header();
    report["summary"] = Json::parse(sim::trace_summary_json(trace));
    ctx.write("summary.json", dump(report));
  }
  if (trace.stalled) *ctx.err << "warning: network capacity reached zero; simulation stopped early\n";
  return 0;
}

}  // namespace powsec::cli
