#include "vinechar/report.hpp"

#include <fstream>

#include <fmt/core.h>
#include <json.hpp>

#include "vinechar/carbon.hpp"
#include "vinechar/error.hpp"

namespace vinechar::report {

using ordered = nlohmann::ordered_json;

std::string currency(double v) { return fmt::format("{:.2f}", v); }
std::string ratio(double v) { return fmt::format("{:.4f}", v); }

const mc::SectorSummary& sector_summary(const mc::McSummary& s, const std::string& sector) {
  if (sector == "biochar") return s.biochar;
  if (sector == "vineyard") return s.vineyard;
  if (sector == "winery") return s.winery;
  if (sector == "chain") return s.chain;
  throw Error(ErrorKind::UnknownSector, fmt::format("unknown sector '{}'", sector));
}

namespace {

const char* const kColumns[] = {"biochar", "vineyard", "winery", "chain"};

ordered stats_json(const mc::Statistics& st) {
  return ordered{{"count", st.count},
                 {"mean", st.mean},
                 {"min", st.min},
                 {"max", st.max},
                 {"std", st.std},
                 {"p5", st.p5},
                 {"p50", st.p50},
                 {"p95", st.p95},
                 {"histogram", {{"edges", st.histogram.edges}, {"counts", st.histogram.counts}}}};
}

ordered sector_json(const mc::SectorSummary& s) {
  return ordered{{"bc_ratio", stats_json(s.bc_ratio)},
                 {"npv", stats_json(s.npv)},
                 {"annual_net_income", stats_json(s.annual_net_income)},
                 {"prob_bc_gt_1", s.prob_bc_gt_1},
                 {"annual_net_income_per_ha", s.annual_net_income_per_ha},
                 {"npv_per_ha", s.npv_per_ha}};
}

}  // namespace

std::string summary_json(const mc::McSummary& s) {
  ordered root;
  root["scenario"] = s.scenario;
  root["iterations"] = s.iterations;
  root["seed"] = s.master_seed;
  ordered sectors;
  for (const char* name : kColumns) sectors[name] = sector_json(sector_summary(s, name));
  root["sectors"] = sectors;
  root["means"] = {{"biochar_tonnes", s.mean_biochar_tonnes},
                   {"treated_hectares", s.mean_treated_hectares},
                   {"extra_grapes_tonnes", s.mean_extra_grapes},
                   {"extra_wine_litres", s.mean_extra_wine_litres},
                   {"co2_tonnes", s.mean_co2_tonnes}};
  root["sequestration_cost"] = stats_json(s.sequestration_cost);
  return root.dump(2) + "\n";
}

std::string sectors_csv(const mc::McSummary& s) {
  std::string out = "metric,biochar,vineyard,winery,chain\n";
  auto row = [&](const char* metric, auto value) {
    out += metric;
    for (const char* name : kColumns) {
      out += ',';
      out += value(sector_summary(s, name));
    }
    out += '\n';
  };
  using S = mc::SectorSummary;
  row("annual_net_income", [](const S& x) { return currency(x.annual_net_income.mean); });
  row("npv", [](const S& x) { return currency(x.npv.mean); });
  row("annual_net_income_per_ha", [](const S& x) { return currency(x.annual_net_income_per_ha); });
  row("npv_per_ha", [](const S& x) { return currency(x.npv_per_ha); });
  row("bc_ratio", [](const S& x) { return ratio(x.bc_ratio.mean); });
  row("prob_bc_gt_1", [](const S& x) { return ratio(x.prob_bc_gt_1); });
  return out;
}

std::string npv_range_csv(const mc::McSummary& s) {
  std::string out = "sector,min,mean,max\n";
  for (const char* name : kColumns) {
    const auto& npv = sector_summary(s, name).npv;
    out += fmt::format("{},{},{},{}\n", name, currency(npv.min), currency(npv.mean),
                       currency(npv.max));
  }
  return out;
}

std::string histogram_csv(const mc::McSummary& s, const std::string& sector) {
  const auto& h = sector_summary(s, sector).bc_ratio.histogram;
  std::string out = "bin_lower,bin_upper,count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out += fmt::format("{},{},{}\n", ratio(h.edges[b]), ratio(h.edges[b + 1]), h.counts[b]);
  }
  return out;
}

std::string samples_csv(const mc::SampleMatrix& m) {
  std::string out = "iteration";
  for (const auto& name : m.names()) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += std::to_string(r);
    for (std::size_t c = 0; c < m.names().size(); ++c) {
      out += fmt::format(",{:.12g}", m.column(c)[r]);
    }
    out += '\n';
  }
  return out;
}

std::string tornado_csv(const sense::SensitivityReport& r) {
  std::string out = "variable_id,r_squared,rank\n";
  for (const auto& e : r.entries) {
    out += fmt::format("{},{},{}\n", e.variable_id, ratio(e.r_squared), e.rank);
  }
  return out;
}

std::string breakeven_json(const std::string& scenario, const chain::Breakeven& b) {
  ordered root{{"scenario", scenario},
               {"sector", "biochar"},
               {"breakeven_price", b.price},
               {"bc_ratio_at_price", b.bc_ratio},
               {"bracket_low", b.bracket_low},
               {"bracket_high", b.bracket_high},
               {"degenerate", b.degenerate}};
  return root.dump(2) + "\n";
}

CarbonReport carbon_report(const ScenarioSpec& spec, const mc::McResult& result,
                           std::optional<double> offset_price,
                           std::optional<double> target_cost) {
  const auto& s = result.summary;
  CarbonReport c;
  c.scenario = spec.name;
  c.mean_co2_t = s.mean_co2_tonnes;
  c.mean_treated_ha = s.mean_treated_hectares;
  c.co2_per_ha = c.mean_treated_ha > 0.0 ? c.mean_co2_t / c.mean_treated_ha : 0.0;
  c.recovery_factor = finance::crf(spec.finance.discount_rate, spec.finance.equipment_life_years);
  c.ag_benefit_per_t_co2 = spec.ag_benefit_per_t_co2;
  c.coproduct_benefit_per_t_co2 = spec.coproduct_benefit_per_t_co2;
  c.mean_sequestration_cost = s.sequestration_cost.mean;
  c.max_sequestration_cost = s.sequestration_cost.max;
  c.min_sequestration_cost = std::max(0.0, s.sequestration_cost.min);
  c.offset_price = offset_price ? *offset_price : dist::mean(spec.carbon.offset_price);
  if (c.offset_price < 0.0) {
    throw Error(ErrorKind::InvalidParameter, "offset price must be non-negative");
  }
  c.offset_benefit = carbon::offset_benefit(c.mean_co2_t, c.offset_price);
  c.offset_benefit_per_ha = c.mean_treated_ha > 0.0 ? c.offset_benefit / c.mean_treated_ha : 0.0;
  c.co2_per_car = dist::mean(spec.carbon.co2_per_car);
  c.cars_equivalent = carbon::cars_equivalent(c.mean_co2_t, c.co2_per_car);

  if (target_cost) {
    auto mean_col = [&](const char* name) {
      double sum = 0.0;
      for (double v : result.samples.column(name)) sum += v;
      return sum / static_cast<double>(result.samples.rows());
    };
    carbon::SequestrationCostInputs in;
    in.capital = mean_col("biochar.capital_equipment");
    in.recovery_factor = c.recovery_factor;
    in.annual_operating_cost = mean_col("biochar.operating_cost");
    in.co2_per_year = c.mean_co2_t;
    in.coproduct_benefit = spec.coproduct_benefit_per_t_co2;
    c.target_sequestration_cost = target_cost;
    c.implied_ag_benefit_per_t_co2 = carbon::implied_ag_benefit(in, *target_cost);
  }
  return c;
}

std::string carbon_json(const CarbonReport& c) {
  ordered root{{"scenario", c.scenario},
               {"mean_co2_t_per_year", c.mean_co2_t},
               {"mean_treated_ha", c.mean_treated_ha},
               {"co2_t_per_ha", c.co2_per_ha},
               {"capital_recovery_factor", c.recovery_factor},
               {"ag_benefit_per_t_co2", c.ag_benefit_per_t_co2},
               {"coproduct_benefit_per_t_co2", c.coproduct_benefit_per_t_co2},
               {"sequestration_cost",
                {{"mean", c.mean_sequestration_cost},
                 {"max", c.max_sequestration_cost},
                 {"min", c.min_sequestration_cost}}},
               {"offset_price", c.offset_price},
               {"offset_benefit", c.offset_benefit},
               {"offset_benefit_per_ha", c.offset_benefit_per_ha},
               {"co2_per_car", c.co2_per_car},
               {"cars_equivalent", c.cars_equivalent}};
  if (c.target_sequestration_cost) {
    root["calibration"] = {{"target_sequestration_cost", *c.target_sequestration_cost},
                           {"implied_ag_benefit_per_t_co2", *c.implied_ag_benefit_per_t_co2}};
  }
  return root.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::InvalidParameter, fmt::format("cannot write {}", path.string()));
  out << content;
}

}  // namespace vinechar::report
