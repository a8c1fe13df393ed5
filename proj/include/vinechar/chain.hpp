#pragma once

#include "vinechar/finance.hpp"
#include "vinechar/scenario.hpp"

namespace vinechar::chain {

/// t biochar per year: all pomace and prunings are converted, nothing is
/// imported.
double biochar_production(const Draw& d);

/// Hectares treated, capped at max_fraction_treated x total_hectares.
double treated_area(const Draw& d, double biochar_t);

/// Whole years used to amortize one application; the sampled value is
/// rounded to the nearest year.
int amortization_years(const Draw& d);

finance::CashFlowSchedule biochar_sector_schedule(const Draw& d,
                                                  const finance::FinanceParams& fp);

/// Extra tonnes of grapes harvested from the treated area.
double extra_grapes(const Draw& d, double area);

finance::CashFlowSchedule vineyard_sector_schedule(const Draw& d, double area,
                                                   double biochar_price_paid,
                                                   VineyardBiocharCost convention,
                                                   const finance::FinanceParams& fp);

/// Blended $/L across white and red by crop share.
double blended_wine_price(const Draw& d);
double blended_wine_cost(const Draw& d);

finance::CashFlowSchedule winery_sector_schedule(const Draw& d, double extra_grapes_t,
                                                 const finance::FinanceParams& fp);

struct SectorResult {
  double bc_ratio = 0.0;
  double npv = 0.0;
  double annual_net_income = 0.0;
  double pv_benefits = 0.0;
  double cost_base = 0.0;  // capital + PV(costs)
  double annual_net_income_per_ha = 0.0;
  double npv_per_ha = 0.0;
};

struct ChainResult {
  SectorResult biochar;
  SectorResult vineyard;
  SectorResult winery;
  SectorResult total;

  double biochar_tonnes = 0.0;
  double vineyard_biochar_tonnes = 0.0;  // closed system: equals biochar_tonnes
  double treated_hectares = 0.0;
  double extra_grapes = 0.0;
  double extra_wine_litres = 0.0;
  double co2_tonnes = 0.0;

  // Derived regressors reported in the sensitivity tables.
  double biochar_operating_cost = 0.0;  // $/yr
  double vineyard_revenue_per_ha = 0.0;
  double vineyard_variable_cost_per_ha = 0.0;
  double planting_capital = 0.0;
  double wine_price = 0.0;  // blended $/L
  double wine_cost = 0.0;   // blended $/L
};

/// Evaluates all three sectors for one draw. Biochar is traded at the
/// market price in both scenarios; the integrated scenario differs only
/// through its cost tables. Propagates ZeroCostBase.
ChainResult evaluate_chain(const ScenarioSpec& spec, const Draw& d);

/// Biochar-sector B/C with every variable at its base value except the
/// biochar price.
double base_biochar_bc(const ScenarioSpec& spec, double biochar_price);

struct Breakeven {
  double price = 0.0;
  double bc_ratio = 1.0;  // at `price`
  double bracket_low = 0.0;
  double bracket_high = 0.0;
  bool degenerate = false;  // no costs at all: any positive price breaks even
};

/// Biochar price at which the base-value biochar B/C equals 1, searched over
/// the price distribution's [low, high]. Throws NoBracket.
Breakeven biochar_breakeven(const ScenarioSpec& spec, double tolerance = 1e-9);

}  // namespace vinechar::chain
