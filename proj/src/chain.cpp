#include "vinechar/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vinechar/carbon.hpp"

namespace vinechar::chain {

using finance::CashFlowSchedule;

double biochar_production(const Draw& d) {
  return (d.biochar.pomace_supply + d.biochar.prunings_supply) * d.biochar.conversion_rate;
}

double treated_area(const Draw& d, double biochar_t) {
  const double cap = d.vineyard.max_fraction_treated * d.vineyard.total_hectares;
  return std::min(biochar_t / d.vineyard.application_rate, cap);
}

int amortization_years(const Draw& d) {
  return std::max(1, static_cast<int>(std::lround(d.vineyard.application_amortization_years)));
}

CashFlowSchedule biochar_sector_schedule(const Draw& d, const finance::FinanceParams& fp) {
  const auto& b = d.biochar;
  const double tonnes = biochar_production(d);
  const double feedstock = b.pomace_supply * b.pomace_cost + b.prunings_supply * b.prunings_cost;
  const double operating = tonnes * (b.variable_cost_per_t + b.fixed_cost_per_t);
  return CashFlowSchedule::level(b.capital_equipment, tonnes * b.biochar_price,
                                 feedstock + operating, fp.horizon_years);
}

double extra_grapes(const Draw& d, double area) {
  return area * d.vineyard.yield_t_per_ha * d.vineyard.yield_increase;
}

CashFlowSchedule vineyard_sector_schedule(const Draw& d, double area,
                                          double biochar_price_paid,
                                          VineyardBiocharCost convention,
                                          const finance::FinanceParams& fp) {
  const auto& v = d.vineyard;
  const double grapes = extra_grapes(d, area);
  const double revenue = grapes * v.grape_price;
  double cost = area * v.direct_cost_per_ha * v.yield_increase;
  if (convention == VineyardBiocharCost::Amortized) {
    cost += area * finance::amortize_straight_line(v.application_rate * biochar_price_paid,
                                                   amortization_years(d));
  }
  return CashFlowSchedule::level(v.capital_cost_per_t * grapes, revenue, cost,
                                 fp.horizon_years);
}

double blended_wine_price(const Draw& d) {
  return d.winery.white_share * d.winery.white_price + d.winery.red_share * d.winery.red_price;
}

double blended_wine_cost(const Draw& d) {
  return d.winery.white_share * d.winery.white_cost + d.winery.red_share * d.winery.red_cost;
}

CashFlowSchedule winery_sector_schedule(const Draw& d, double extra_grapes_t,
                                        const finance::FinanceParams& fp) {
  const auto& w = d.winery;
  const double litres = extra_grapes_t * w.extraction_rate;
  const double white = litres * w.white_share;
  const double red = litres * w.red_share;
  return CashFlowSchedule::level(0.0, white * w.white_price + red * w.red_price,
                                 white * w.white_cost + red * w.red_cost, fp.horizon_years);
}

namespace {

SectorResult assess(const finance::FinanceParams& fp, const CashFlowSchedule& s, double area) {
  SectorResult r;
  r.pv_benefits = finance::present_value(fp.discount_rate, s.benefits);
  r.cost_base = s.capital_at_t0 + finance::present_value(fp.discount_rate, s.costs);
  r.bc_ratio = finance::bc_ratio(fp, s);
  r.npv = finance::npv(fp, s);
  r.annual_net_income = s.benefits.front() - s.costs.front();
  if (area > 0.0) {
    r.annual_net_income_per_ha = r.annual_net_income / area;
    r.npv_per_ha = r.npv / area;
  }
  return r;
}

}  // namespace

ChainResult evaluate_chain(const ScenarioSpec& spec, const Draw& d) {
  const auto& fp = spec.finance;
  ChainResult out;
  out.biochar_tonnes = biochar_production(d);
  out.vineyard_biochar_tonnes = out.biochar_tonnes;
  out.treated_hectares = treated_area(d, out.biochar_tonnes);
  out.extra_grapes = extra_grapes(d, out.treated_hectares);
  out.extra_wine_litres = out.extra_grapes * d.winery.extraction_rate;
  out.co2_tonnes = carbon::co2_sequestered(out.biochar_tonnes, d.carbon.carbon_content);

  const CashFlowSchedule biochar = biochar_sector_schedule(d, fp);
  const CashFlowSchedule vineyard =
      vineyard_sector_schedule(d, out.treated_hectares, d.biochar.biochar_price,
                               spec.vineyard_biochar_cost, fp);
  const CashFlowSchedule winery = winery_sector_schedule(d, out.extra_grapes, fp);

  const double area = out.treated_hectares;
  out.biochar = assess(fp, biochar, area);
  out.vineyard = assess(fp, vineyard, area);
  out.winery = assess(fp, winery, area);

  SectorResult& t = out.total;
  for (const SectorResult* s : {&out.biochar, &out.vineyard, &out.winery}) {
    t.pv_benefits += s->pv_benefits;
    t.cost_base += s->cost_base;
    t.npv += s->npv;
    t.annual_net_income += s->annual_net_income;
    t.annual_net_income_per_ha += s->annual_net_income_per_ha;
    t.npv_per_ha += s->npv_per_ha;
  }
  t.bc_ratio = t.pv_benefits / t.cost_base;

  out.biochar_operating_cost = biochar.costs.front();
  if (area > 0.0) {
    out.vineyard_revenue_per_ha = vineyard.benefits.front() / area;
    out.vineyard_variable_cost_per_ha = vineyard.costs.front() / area;
  }
  out.planting_capital = vineyard.capital_at_t0;
  out.wine_price = blended_wine_price(d);
  out.wine_cost = blended_wine_cost(d);
  return out;
}

double base_biochar_bc(const ScenarioSpec& spec, double biochar_price) {
  Draw d = base_draw(spec);
  d.biochar.biochar_price = biochar_price;
  return finance::bc_ratio(spec.finance, biochar_sector_schedule(d, spec.finance));
}

Breakeven biochar_breakeven(const ScenarioSpec& spec, double tolerance) {
  Breakeven out;
  out.bracket_low = spec.biochar.biochar_price.low;
  out.bracket_high = spec.biochar.biochar_price.high;

  const Draw base = base_draw(spec);
  const CashFlowSchedule at_zero = [&] {
    Draw d = base;
    d.biochar.biochar_price = 0.0;
    return biochar_sector_schedule(d, spec.finance);
  }();
  const double cost_base =
      at_zero.capital_at_t0 + finance::present_value(spec.finance.discount_rate, at_zero.costs);
  if (cost_base == 0.0) {
    out.degenerate = true;
    out.price = out.bracket_low > 0.0 ? out.bracket_low : out.bracket_high;
    out.bc_ratio = std::numeric_limits<double>::infinity();
    return out;
  }

  auto objective = [&](double price) { return base_biochar_bc(spec, price) - 1.0; };
  finance::BreakevenOptions opts;
  opts.tolerance = tolerance;
  out.price = finance::breakeven(objective, out.bracket_low, out.bracket_high, opts);
  out.bc_ratio = base_biochar_bc(spec, out.price);
  return out;
}

}  // namespace vinechar::chain
