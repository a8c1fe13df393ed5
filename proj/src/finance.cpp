#include "vinechar/finance.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "vinechar/error.hpp"

namespace vinechar::finance {

void validate(const FinanceParams& p) {
  if (!(p.discount_rate > 0.0 && p.discount_rate < 1.0)) {
    throw Error(ErrorKind::InvalidParameter,
                fmt::format("discount rate {} outside (0, 1)", p.discount_rate));
  }
  if (p.horizon_years < 1) {
    throw Error(ErrorKind::InvalidParameter, "horizon must be at least one year");
  }
  if (p.equipment_life_years < 1) {
    throw Error(ErrorKind::InvalidParameter, "equipment life must be at least one year");
  }
}

CashFlowSchedule CashFlowSchedule::level(double capital, double annual_benefit,
                                         double annual_cost, int years) {
  CashFlowSchedule s;
  s.capital_at_t0 = capital;
  s.benefits.assign(static_cast<std::size_t>(years), annual_benefit);
  s.costs.assign(static_cast<std::size_t>(years), annual_cost);
  return s;
}

void validate(const FinanceParams& p, const CashFlowSchedule& s) {
  const auto horizon = static_cast<std::size_t>(p.horizon_years);
  if (s.benefits.size() != horizon || s.costs.size() != horizon) {
    throw Error(ErrorKind::LengthMismatch,
                fmt::format("schedule has {} benefits and {} costs, horizon is {}",
                            s.benefits.size(), s.costs.size(), horizon));
  }
  if (s.capital_at_t0 < 0.0) {
    throw Error(ErrorKind::InvalidParameter, "negative capital");
  }
  for (std::size_t t = 0; t < horizon; ++t) {
    if (s.benefits[t] < 0.0 || s.costs[t] < 0.0) {
      throw Error(ErrorKind::InvalidParameter,
                  fmt::format("negative cash flow in year {}", t + 1));
    }
  }
}

double discount_factor(double rate, int year) { return std::pow(1.0 + rate, -year); }

double annuity_factor(double rate, int years) {
  return (1.0 - std::pow(1.0 + rate, -years)) / rate;
}

double present_value(double rate, const std::vector<double>& flows) {
  double pv = 0.0;
  double df = 1.0;
  for (double f : flows) {
    df /= (1.0 + rate);
    pv += f * df;
  }
  return pv;
}

double npv(const FinanceParams& p, const CashFlowSchedule& s) {
  double pv = -s.capital_at_t0;
  double df = 1.0;
  const std::size_t n = std::min(s.benefits.size(), s.costs.size());
  for (std::size_t t = 0; t < n; ++t) {
    df /= (1.0 + p.discount_rate);
    pv += (s.benefits[t] - s.costs[t]) * df;
  }
  return pv;
}

double bc_ratio(const FinanceParams& p, const CashFlowSchedule& s) {
  const double denominator = s.capital_at_t0 + present_value(p.discount_rate, s.costs);
  if (denominator == 0.0) {
    throw Error(ErrorKind::ZeroCostBase, "benefit-cost ratio has a zero cost base");
  }
  return present_value(p.discount_rate, s.benefits) / denominator;
}

double crf(double rate, int years) {
  const double growth = std::pow(1.0 + rate, years);
  return rate * growth / (growth - 1.0);
}

double amortize_straight_line(double total, int years) {
  if (years < 1) {
    throw Error(ErrorKind::InvalidParameter, "amortization needs at least one year");
  }
  return total / years;
}

double breakeven(const std::function<double(double)>& objective, double lo, double hi,
                 BreakevenOptions opts) {
  double f_lo = objective(lo);
  const double f_hi = objective(hi);
  if (std::abs(f_lo) <= opts.tolerance) return lo;
  if (std::abs(f_hi) <= opts.tolerance) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0)) {
    throw Error(ErrorKind::NoBracket,
                fmt::format("objective does not change sign on [{}, {}]", lo, hi));
  }
  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < opts.max_iterations; ++i) {
    mid = 0.5 * (lo + hi);
    const double f_mid = objective(mid);
    if (std::abs(f_mid) <= opts.tolerance || mid == lo || mid == hi) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

}  // namespace vinechar::finance
