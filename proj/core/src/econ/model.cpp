#include "powsec/econ/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "powsec/error.hpp"

namespace powsec::econ {
namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw InvalidParameter(field, what);
}

void require_finite(double v, const char* field) { require(std::isfinite(v), field, "must be finite"); }

void validate_n(double n, double min_n) {
  require_finite(n, "n");
  if (n < min_n) {
    throw InvalidParameter("n", min_n == 1 ? "must be >= 1" : "must be >= 2");
  }
}

// gamma (n-1)/n^2, the competition-intensity term of the first-order condition.
double contest_factor(double gamma, double n) { return gamma * (n - 1.0) / (n * n); }

double fixed_point_map(const ModelParams& p, const Market& mk, double n, FreeEntryExponent exponent) {
  const double reward = mk.expected_reward();
  const double running = p.running_unit_cost();
  double variable_term = 0.0;
  if (running > 0.0) {
    const double base = contest_factor(p.gamma, n) * reward / p.effective_unit_cost();
    const double power = exponent == FreeEntryExponent::Consistent ? 1.0 / (1.0 - p.gamma) : 1.0 - p.gamma;
    variable_term = running * std::pow(base, power);
  }
  return reward / (p.rho * p.fixed_cost + variable_term);
}

}  // namespace

void validate(const ModelParams& p) {
  for (auto [v, f] : {std::pair{p.gamma, "gamma"}, {p.rho, "rho"}, {p.delta, "delta"},
                      {p.fixed_cost, "fixed_cost"}, {p.variable_cost, "variable_cost"},
                      {p.equipment_price, "equipment_price"}}) {
    require_finite(v, f);
  }
  require(p.gamma > 0.0 && p.gamma < 1.0, "gamma", "must satisfy 0 < gamma < 1");
  require(p.rho >= 0.0, "rho", "must be >= 0");
  require(p.delta >= 0.0 && p.delta <= 1.0, "delta", "must satisfy 0 <= delta <= 1");
  require(p.variable_cost >= 0.0, "variable_cost", "must be >= 0");
  require(p.equipment_price >= 0.0, "equipment_price", "must be >= 0");
  require(p.fixed_cost >= 0.0, "fixed_cost", "must be >= 0");
}

void validate(const Market& m) {
  require_finite(m.exp_price, "exp_price");
  require_finite(m.reward_coins, "reward_coins");
  require_finite(m.price_shock, "price_shock");
  require(m.exp_price >= 0.0, "exp_price", "must be >= 0");
  require(m.reward_coins >= 0.0, "reward_coins", "must be >= 0");
}

void validate(const AttackScenario& s) {
  require_finite(s.capacity_multiple, "capacity_multiple");
  require_finite(s.recovery_fraction, "recovery_fraction");
  require_finite(s.price_drop, "price_drop");
  require_finite(s.double_spend_coins, "double_spend_coins");
  require(s.capacity_multiple > 1.0, "capacity_multiple", "must be > 1");
  require(s.duration_blocks >= 1, "duration_blocks", "must be >= 1");
  require(s.recovery_fraction >= 0.0 && s.recovery_fraction <= 1.0, "recovery_fraction",
          "must lie in [0, 1]");
  require(s.price_drop >= 0.0 && s.price_drop <= 1.0, "price_drop", "must lie in [0, 1]");
  require(s.double_spend_coins >= 0.0, "double_spend_coins", "must be >= 0");
}

double per_miner_capacity(const ModelParams& params, const Market& market, double n) {
  validate(params);
  validate(market);
  validate_n(n, 1.0);
  require(params.effective_unit_cost() > 0.0, "effective_unit_cost", "c + (rho+delta) q must be > 0");
  const double reward = market.expected_reward();
  if (n == 1.0 || reward == 0.0) return 0.0;
  const double base = contest_factor(params.gamma, n) * reward / params.effective_unit_cost();
  return std::pow(base, 1.0 / (1.0 - params.gamma));
}

double network_capacity(const ModelParams& params, const Market& market, double n) {
  validate(params);
  validate(market);
  validate_n(n, 1.0);
  require(params.effective_unit_cost() > 0.0, "effective_unit_cost", "c + (rho+delta) q must be > 0");
  const double g = params.gamma;
  const double scale = std::pow(1.0 / n, (1.0 + g) / (1.0 - g));
  const double gain = g * (n - 1.0) * market.expected_reward() / params.effective_unit_cost();
  return scale * std::pow(gain, 1.0 / (1.0 - g));
}

double foc_residual(const ModelParams& params, const Market& market, double n, double m) {
  validate(params);
  validate(market);
  validate_n(n, 2.0);
  if (!(m > 0.0)) throw InvalidParameter("m", "must be > 0");
  const double marginal_revenue =
      params.gamma * std::pow(m, params.gamma - 1.0) * (n - 1.0) / (n * n) * market.expected_reward();
  // Steady state: lambda = (1+rho) q, so the capital charge is (rho + delta) q.
  return marginal_revenue - params.effective_unit_cost();
}

double steady_state_profit(const ModelParams& params, const Market& market, double n) {
  const double running = params.running_unit_cost();
  const double m = running > 0.0 ? per_miner_capacity(params, market, n) : 0.0;
  return market.expected_reward() / n - params.rho * params.fixed_cost - running * m;
}

EquilibriumResult free_entry_miners(const ModelParams& params, const Market& market,
                                    const FreeEntryOptions& options) {
  validate(params);
  validate(market);
  const double reward = market.expected_reward();
  if (!(reward > 0.0)) throw InvalidParameter("expected_reward", "E(p)R must be > 0");
  const double fixed_flow = params.rho * params.fixed_cost;
  const double running = params.running_unit_cost();
  if (!(fixed_flow > 0.0)) {
    if (!(running > 0.0)) {
      throw InvalidParameter("fixed_cost", "need rho F > 0 or c + delta q > 0");
    }
    throw NoSolution("free entry: rho F = 0 leaves per-miner profit positive for all large n");
  }
  if (running > 0.0 && !(params.effective_unit_cost() > 0.0)) {
    throw InvalidParameter("effective_unit_cost", "c + (rho+delta) q must be > 0");
  }

  const double upper = reward / fixed_flow;
  auto finish = [&](double n, int iterations, std::string method) {
    EquilibriumResult r;
    r.n = n;
    r.iterations = iterations;
    r.method = std::move(method);
    if (params.effective_unit_cost() > 0.0) {
      r.m_star = per_miner_capacity(params, market, n);
      r.network_capacity = n * r.m_star;
      if (r.m_star > 0.0 && n >= 2.0) r.foc_residual = foc_residual(params, market, n, r.m_star);
    } else {
      r.m_star = std::numeric_limits<double>::infinity();
      r.network_capacity = std::numeric_limits<double>::infinity();
    }
    return r;
  };

  if (running == 0.0) {
    if (upper < 2.0) throw NoSolution("free entry: E(p)R / (rho F) < 2");
    return finish(upper, 0, "closed-form");
  }
  if (upper < 2.0) throw NoSolution("free entry: search bracket [2, E(p)R/(rho F)] is empty");

  auto phi = [&](double n) { return fixed_point_map(params, market, n, options.exponent); };
  auto solved = [&](double n) { return std::abs(n - phi(n)) <= options.tolerance * n; };

  // Damped iteration from the top of the bracket heads for the largest root.
  double n = upper;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const double next = (1.0 - options.damping) * n + options.damping * phi(n);
    if (!std::isfinite(next) || next < 2.0 || next > upper) break;
    n = next;
    if (solved(n)) return finish(n, it, "fixed-point");
  }

  // Fallback: locate the largest sign change of g(n) = n - phi(n) on a log grid.
  constexpr int kGrid = 4000;
  const double log_lo = std::log(2.0);
  const double log_hi = std::log(upper);
  auto grid_point = [&](int i) {
    return i == kGrid ? upper : std::exp(log_lo + (log_hi - log_lo) * i / kGrid);
  };
  auto g = [&](double x) { return x - phi(x); };
  double hi = grid_point(kGrid);
  double g_hi = g(hi);
  double lo = 0;
  bool bracketed = false;
  for (int i = kGrid - 1; i >= 0; --i) {
    const double x = grid_point(i);
    const double gx = g(x);
    if (gx == 0.0) return finish(x, 0, "bisection");
    if ((gx < 0.0) != (g_hi < 0.0)) {
      lo = x;
      bracketed = true;
      break;
    }
    hi = x;
    g_hi = gx;
  }
  if (!bracketed) {
    throw NoSolution("free entry: n = E(p)R / (rho F + (c + delta q) m*(n)) has no root in [2, " +
                     std::to_string(upper) + "]");
  }
  int it = 0;
  for (; it < 400 && (hi - lo) > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm < 0.0) == (g_hi < 0.0)) {
      hi = mid;
      g_hi = gm;
    } else {
      lo = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  if (!solved(root)) throw NonConvergence("free entry: bisection did not meet tolerance");
  return finish(root, options.max_iterations + it, "bisection");
}

std::int64_t integer_free_entry(const ModelParams& params, const Market& market, double n_continuous) {
  if (!(n_continuous >= 1.0)) throw InvalidParameter("n", "must be >= 1");
  auto n = static_cast<std::int64_t>(std::floor(n_continuous));
  while (n >= 2 && steady_state_profit(params, market, static_cast<double>(n)) < 0.0) --n;
  return std::max<std::int64_t>(n, 1);
}

AttackCost attack_cost(const AttackScenario& scenario, const ModelParams& params, const Market& market,
                       double n) {
  validate(scenario);
  validate_n(n, 2.0);
  const double m = per_miner_capacity(params, market, n);
  const double q = params.equipment_price;
  const double bracket = (params.variable_cost + q * params.delta) - (1.0 - scenario.recovery_fraction) * q;
  AttackCost out;
  out.value = static_cast<double>(scenario.duration_blocks) * scenario.capacity_multiple * n * m * bracket;
  out.negative_bracket = bracket < 0.0;
  return out;
}

double double_spend_payoff(const AttackScenario& scenario, const Market& market) {
  validate(scenario);
  validate(market);
  const double held = market.exp_price * scenario.double_spend_coins;
  return held - scenario.price_drop * held;
}

double attack_gain(const AttackScenario& scenario, const Market& market) {
  return (1.0 - scenario.price_drop) * static_cast<double>(scenario.duration_blocks) *
             market.expected_reward() +
         double_spend_payoff(scenario, market);
}

double beta_coefficient(const AttackScenario& scenario, const ModelParams& params, double n) {
  validate(scenario);
  validate(params);
  validate_n(n, 2.0);
  require(params.effective_unit_cost() > 0.0, "effective_unit_cost", "c + (rho+delta) q must be > 0");
  const double q = params.equipment_price;
  const double bracket = (params.variable_cost + q * params.delta) - (1.0 - scenario.recovery_fraction) * q;
  const double base = contest_factor(params.gamma, n) / params.effective_unit_cost();
  return scenario.capacity_multiple * n * bracket * std::pow(base, 1.0 / (1.0 - params.gamma));
}

IncentiveCheck is_incentive_compatible(const AttackScenario& scenario, const ModelParams& params,
                                       const Market& market, double n) {
  const AttackCost cost = attack_cost(scenario, params, market, n);
  IncentiveCheck out;
  out.cost = cost.value;
  out.gain = attack_gain(scenario, market);
  out.margin = out.cost - out.gain;
  out.compatible = out.margin >= 0.0;
  out.negative_bracket = cost.negative_bracket;
  out.beta = beta_coefficient(scenario, params, n);

  if (out.beta > 0.0) {
    const double reward = market.expected_reward();
    const double s = static_cast<double>(scenario.duration_blocks);
    const double g = params.gamma;
    const double lhs =
        (std::pow(reward, g / (1.0 - g)) - (1.0 - scenario.price_drop) / out.beta) * s * reward;
    const double rhs = double_spend_payoff(scenario, market) / out.beta;
    out.beta_form_margin = lhs - rhs;
    // Both sides are computed independently; allow rounding noise near zero.
    const double scale = std::max({std::abs(out.cost), std::abs(out.gain), 1e-300}) / out.beta;
    const bool beta_form_ok = *out.beta_form_margin >= -1e-10 * scale;
    const bool direct_ok = out.margin >= -1e-10 * std::max({std::abs(out.cost), std::abs(out.gain), 1e-300});
    out.forms_agree = beta_form_ok == direct_ok;
  }
  return out;
}

std::optional<double> break_even_price_drop(AttackScenario scenario, const ModelParams& params,
                                            const Market& market, double n) {
  auto margin_at = [&](double d) {
    scenario.price_drop = d;
    return is_incentive_compatible(scenario, params, market, n).margin;
  };
  double lo = 0.0;
  double hi = 1.0;
  double f_lo = margin_at(lo);
  const double f_hi = margin_at(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) return std::nullopt;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = margin_at(mid);
    if ((fm < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double reward_elasticity(const ModelParams& params) {
  require(params.gamma > 0.0 && params.gamma < 1.0, "gamma", "must satisfy 0 < gamma < 1");
  return 1.0 / (1.0 - params.gamma);
}

double cost_elasticity(const ModelParams& params) { return -reward_elasticity(params); }

double gamma_for_reward_elasticity(double elasticity) {
  if (!(elasticity > 1.0) || !std::isfinite(elasticity)) {
    throw InvalidParameter("elasticity", "must be finite and > 1");
  }
  return 1.0 - 1.0 / elasticity;
}

double numeric_elasticity(const std::function<double(double)>& f, double x, double bump) {
  if (!(bump > 0.0 && bump <= 0.1)) throw InvalidParameter("bump", "must lie in (0, 0.1]");
  if (!(x > 0.0)) throw InvalidParameter("point", "must be > 0");
  const double up = f(x * (1.0 + bump));
  const double down = f(x * (1.0 - bump));
  return (std::log(up) - std::log(down)) / (std::log1p(bump) - std::log1p(-bump));
}

}  // namespace powsec::econ
