#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "vinechar/chain.hpp"
#include "vinechar/mc.hpp"
#include "vinechar/sense.hpp"

namespace vinechar::report {

// Fixed output formatting: currency with 2 decimals, ratios with 4.
std::string currency(double v);
std::string ratio(double v);

std::string summary_json(const mc::McSummary& s);

/// Sector table: annual net income, NPV, their per-hectare versions, mean
/// B/C and P(B/C > 1), one column per sector plus the chain total.
std::string sectors_csv(const mc::McSummary& s);

/// min / mean / max NPV per sector.
std::string npv_range_csv(const mc::McSummary& s);

/// B/C histogram for one sector ("biochar", "vineyard", "winery", "chain").
std::string histogram_csv(const mc::McSummary& s, const std::string& sector);

std::string samples_csv(const mc::SampleMatrix& m);

std::string tornado_csv(const sense::SensitivityReport& r);

std::string breakeven_json(const std::string& scenario, const chain::Breakeven& b);

struct CarbonReport {
  std::string scenario;
  double mean_co2_t = 0.0;
  double mean_treated_ha = 0.0;
  double co2_per_ha = 0.0;
  double recovery_factor = 0.0;
  double ag_benefit_per_t_co2 = 0.0;
  double coproduct_benefit_per_t_co2 = 0.0;
  double mean_sequestration_cost = 0.0;
  double max_sequestration_cost = 0.0;
  double min_sequestration_cost = 0.0;  // clamped at zero
  double offset_price = 0.0;
  double offset_benefit = 0.0;
  double offset_benefit_per_ha = 0.0;
  double co2_per_car = 0.0;
  std::int64_t cars_equivalent = 0;
  // Only when a target cost was requested.
  std::optional<double> target_sequestration_cost;
  std::optional<double> implied_ag_benefit_per_t_co2;
};

/// Mean-based carbon accounting from a finished run. The implied B_a is
/// solved at the scenario's mean K, C and dCO2.
CarbonReport carbon_report(const ScenarioSpec& spec, const mc::McResult& result,
                           std::optional<double> offset_price,
                           std::optional<double> target_cost);

std::string carbon_json(const CarbonReport& c);

/// Sector key -> accessor.
const mc::SectorSummary& sector_summary(const mc::McSummary& s, const std::string& sector);

void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace vinechar::report
