#pragma once

// Steady-state mining equilibrium under learning-by-mining contest odds
// e^{m_i^gamma} / sum_j e^{m_j^gamma}, the free-entry miner count, and the
// majority-attack incentive-compatibility condition.
//
// All money values are in one abstract fiat unit; no conversion happens here.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace powsec::econ {

struct ModelParams {
  double gamma = 0.5;           // learning transformation exponent, 0 < gamma < 1
  double rho = 0.05;            // discount rate per period
  double delta = 0.1;           // depreciation rate per period
  double fixed_cost = 0.0;      // F, one-time entry cost
  double variable_cost = 1.0;   // c, per compute-unit per period
  double equipment_price = 10;  // q, per compute-unit

  // c + (rho + delta) q: user cost of one compute-unit for one period.
  double effective_unit_cost() const { return variable_cost + (rho + delta) * equipment_price; }
  // c + delta q: the running-cost term of the zero-profit condition.
  double running_unit_cost() const { return variable_cost + delta * equipment_price; }
};

struct Market {
  double exp_price = 1.0;     // E(p), money per coin
  double reward_coins = 1.0;  // R, coins per block
  double price_shock = 0.0;   // v = p - E(p); never enters the equilibrium

  double expected_reward() const { return exp_price * reward_coins; }
  double realized_price() const { return exp_price + price_shock; }
};

struct AttackScenario {
  double capacity_multiple = 1.01;  // A > 1
  std::int64_t duration_blocks = 1; // s >= 1
  double recovery_fraction = 0.0;   // theta in [0, 1]
  double price_drop = 0.0;          // Delta in [0, 1]
  double double_spend_coins = 0.0;  // X >= 0
};

struct EquilibriumResult {
  double n = 0;                 // continuous miner count
  double m_star = 0;            // compute-units per miner
  double network_capacity = 0;  // n * m_star
  double foc_residual = 0;      // first-order condition at (n, m_star)
  int iterations = 0;
  std::string method;           // "fixed-point", "bisection" or "closed-form"
};

enum class FreeEntryExponent {
  Consistent,  // 1/(1-gamma): m*(n) from the per-miner capacity formula
  AsPrinted,   // 1-gamma, as typeset in the original derivation
};

struct FreeEntryOptions {
  FreeEntryExponent exponent = FreeEntryExponent::Consistent;
  double damping = 0.5;
  int max_iterations = 10'000;
  double tolerance = 1e-9;  // relative
};

// Throws InvalidParameter naming the offending field.
void validate(const ModelParams& params);
void validate(const Market& market);
void validate(const AttackScenario& scenario);

// [ gamma (n-1)/n^2 * E(p)R / (c + (rho+delta) q) ]^{1/(1-gamma)}; zero for n = 1.
double per_miner_capacity(const ModelParams& params, const Market& market, double n);

// (1/n)^{(1+gamma)/(1-gamma)} [ gamma (n-1) E(p)R / (c + (rho+delta) q) ]^{1/(1-gamma)},
// evaluated directly rather than as n * per_miner_capacity.
double network_capacity(const ModelParams& params, const Market& market, double n);

// Symmetric steady-state marginal profit of one more compute-unit, with the
// shadow price of capital at (1+rho) q. Zero at m = per_miner_capacity.
double foc_residual(const ModelParams& params, const Market& market, double n, double m);

// Per-period profit of one miner in the symmetric equilibrium with n miners:
// E(p)R/n - rho F - (c + delta q) m*(n).
double steady_state_profit(const ModelParams& params, const Market& market, double n);

// Continuous n solving n = E(p)R / (rho F + (c + delta q) m*(n)). Returns the
// largest root in [2, E(p)R/(rho F)]. Throws NoSolution / NonConvergence.
EquilibriumResult free_entry_miners(const ModelParams& params, const Market& market,
                                    const FreeEntryOptions& options = {});

// Largest integer n <= n_continuous with non-negative steady_state_profit (at least 1).
std::int64_t integer_free_entry(const ModelParams& params, const Market& market, double n_continuous);

struct AttackCost {
  double value = 0;
  bool negative_bracket = false;  // (c + q delta) < (1 - theta) q
};

// s A n m* [(c + q delta) - (1 - theta) q]
AttackCost attack_cost(const AttackScenario& scenario, const ModelParams& params, const Market& market,
                       double n);

// V_A(Delta) = E(p) X - Delta E(p) X
double double_spend_payoff(const AttackScenario& scenario, const Market& market);

// Right-hand side of the incentive condition: (1 - Delta) s E(p)R + V_A(Delta).
double attack_gain(const AttackScenario& scenario, const Market& market);

// A n [(c + q delta) - (1 - theta) q] [ gamma (n-1)/n^2 / (c + (rho+delta) q) ]^{1/(1-gamma)}
double beta_coefficient(const AttackScenario& scenario, const ModelParams& params, double n);

struct IncentiveCheck {
  bool compatible = false;
  double margin = 0;       // attack_cost - attack_gain
  double cost = 0;
  double gain = 0;
  double beta = 0;
  // {(E(p)R)^{gamma/(1-gamma)} - (1-Delta)/beta} s E(p)R - V_A/beta; only for beta > 0.
  std::optional<double> beta_form_margin;
  bool forms_agree = true;
  bool negative_bracket = false;
};

IncentiveCheck is_incentive_compatible(const AttackScenario& scenario, const ModelParams& params,
                                       const Market& market, double n);

// Price drop Delta in [0,1] at which the margin changes sign, found by bisection.
// nullopt when the margin keeps one sign over the whole interval.
std::optional<double> break_even_price_drop(AttackScenario scenario, const ModelParams& params,
                                            const Market& market, double n);

// d ln(n m*) / d ln(E(p)R) at fixed n.
double reward_elasticity(const ModelParams& params);
// d ln(n m*) / d ln(c + (rho+delta) q) at fixed n.
double cost_elasticity(const ModelParams& params);
// gamma at which reward_elasticity equals the given value (> 1).
double gamma_for_reward_elasticity(double elasticity);

// Central-difference log-derivative of f at x with relative bump in (0, 0.1].
double numeric_elasticity(const std::function<double(double)>& f, double x, double bump = 1e-5);

}  // namespace powsec::econ
