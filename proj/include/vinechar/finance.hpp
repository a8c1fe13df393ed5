#pragma once

#include <functional>
#include <vector>

namespace vinechar::finance {

/// Discounting parameters. The cash-flow horizon and the equipment life are
/// separate: the first bounds the NPV / B-C sums, the second only feeds the
/// capital recovery factor.
struct FinanceParams {
  double discount_rate = 0.10;
  int horizon_years = 10;
  int equipment_life_years = 20;

  friend bool operator==(const FinanceParams&, const FinanceParams&) = default;
};

void validate(const FinanceParams& p);

/// Year-0 capital plus level-indexed annual flows for years 1..horizon.
struct CashFlowSchedule {
  double capital_at_t0 = 0.0;
  std::vector<double> benefits;
  std::vector<double> costs;

  /// A schedule with the same benefit and cost in every year.
  static CashFlowSchedule level(double capital, double annual_benefit,
                                double annual_cost, int years);
};

void validate(const FinanceParams& p, const CashFlowSchedule& s);

double discount_factor(double rate, int year);

/// (1 - (1+r)^-T) / r
double annuity_factor(double rate, int years);

/// Present value of a year-1..T stream.
double present_value(double rate, const std::vector<double>& flows);

double npv(const FinanceParams& p, const CashFlowSchedule& s);

/// PV(benefits) / (capital + PV(costs)). Throws ZeroCostBase when the
/// denominator is zero.
double bc_ratio(const FinanceParams& p, const CashFlowSchedule& s);

/// Capital recovery factor r(1+r)^T / ((1+r)^T - 1).
double crf(double rate, int years);

double amortize_straight_line(double total, int years);

struct BreakevenOptions {
  double tolerance = 1e-9;
  int max_iterations = 400;
};

/// Bisection on a monotone objective bracketing zero on [lo, hi]. Returns x
/// with |objective(x)| <= tolerance, or the last midpoint once the bracket
/// can no longer be split in double precision. Throws NoBracket.
double breakeven(const std::function<double(double)>& objective, double lo,
                 double hi, BreakevenOptions opts = {});

}  // namespace vinechar::finance
